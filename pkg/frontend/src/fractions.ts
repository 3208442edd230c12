/** Judgment input parsing and display.
 *
 * Cells accept decimals ("2.5") or fractions ("1/6", "2 / 5"), mirroring the
 * CSV dialect the backend reads. Fraction text entered by the user is kept
 * for display; the service always receives the decimal value.
 */

export class JudgmentError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "JudgmentError";
  }
}

const FRACTION = /^([0-9]+(?:\.[0-9]+)?)\s*\/\s*([0-9]+(?:\.[0-9]+)?)$/;

export function parseJudgment(text: string): number {
  const trimmed = text.trim();
  if (trimmed === "") throw new JudgmentError("empty judgment");
  const match = FRACTION.exec(trimmed);
  let value: number;
  if (match) {
    const num = Number(match[1]);
    const den = Number(match[2]);
    if (den === 0) throw new JudgmentError(`zero denominator in ${trimmed}`);
    value = num / den;
  } else {
    value = Number(trimmed);
  }
  if (!Number.isFinite(value)) {
    throw new JudgmentError(`cannot read ${trimmed} as a positive number`);
  }
  if (value <= 0) {
    throw new JudgmentError("judgments must be positive");
  }
  return value;
}

/** Compact decimal rendering for values the user did not type themselves. */
export function formatValue(value: number): string {
  if (Number.isInteger(value)) return String(value);
  return String(Number(value.toPrecision(6)));
}

function gcd(a: number, b: number): number {
  while (b !== 0) [a, b] = [b, a % b];
  return a;
}

/** Display text for the mirrored (reciprocal) cell of a judgment.
 *
 * Typed "1/6" mirrors as "6"; typed "6" mirrors as "1/6"; fractions are
 * simplified ("2/4" mirrors as "2"); decimals fall back to the numeric
 * reciprocal ("2.5" mirrors as "0.4").
 */
export function reciprocalDisplay(text: string): string {
  const trimmed = text.trim();
  const match = FRACTION.exec(trimmed);
  if (match) {
    const num = Number(match[1]);
    const den = Number(match[2]);
    if (Number.isInteger(num) && Number.isInteger(den) && num > 0 && den > 0) {
      const g = gcd(den, num);
      const top = den / g;
      const bottom = num / g;
      return bottom === 1 ? String(top) : `${top}/${bottom}`;
    }
    if (num > 0) return formatValue(den / num);
  }
  const value = Number(trimmed);
  if (Number.isInteger(value) && value >= 1) {
    return value === 1 ? "1" : `1/${value}`;
  }
  if (Number.isFinite(value) && value > 0) {
    return formatValue(1 / value);
  }
  throw new JudgmentError(`cannot mirror ${trimmed}`);
}
