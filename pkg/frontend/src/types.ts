/** JSON shapes served by the pairrank HTTP API (schema_version 1).
 *
 * All indices are 0-based. Estimates arrive already normalized; the UI never
 * derives priorities on its own, it only renders what the service sent.
 */

export type Method = "gmm" | "em";
export type MethodView = Method | "both";

export type Verdict = "RELIABLE_GT" | "RELIABLE_LT" | "INDISTINGUISHABLE";

export interface EstimateDto {
  kind: "estimate";
  method: Method;
  c: number;
  lam: number;
  normalized: boolean;
  omega_star: number[];
  delta: number[];
  omega: number[];
  domega: number[];
}

export interface PairVerdictDto {
  i: number;
  k: number;
  verdict: Verdict;
}

export interface RankingDto {
  kind: "ranking";
  sigma: number;
  order: number[];
  verdicts: PairVerdictDto[];
  warnings: number[][];
}

export interface ComparisonDto {
  kind: "comparison";
  gmm: EstimateDto;
  em: EstimateDto;
  element_overlap: boolean[];
  mean_rank_reversal_pairs: number[][];
  resolved: boolean;
}

export interface MethodBlockDto {
  estimate: EstimateDto;
  ranking: RankingDto;
}

export interface ResultsPayload {
  schema_version: number;
  id: string;
  revision: number;
  what_if: boolean;
  labels: string[];
  matrix: number[][];
  results: {
    gmm?: MethodBlockDto;
    em?: MethodBlockDto;
    comparison?: ComparisonDto;
  };
}

export interface SessionStateDto {
  id: string;
  revision: number;
  labels: string[];
  matrix: number[][];
}

export interface CreatedSessionDto {
  id: string;
  revision: number;
}

export interface ComparisonOverride {
  i: number;
  k: number;
  value: number;
}

export interface ApiErrorBody {
  code: string;
  message: string;
}
