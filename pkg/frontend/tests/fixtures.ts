/** Hand-built payloads for DOM tests that should not need a live service. */

import type {
  EstimateDto,
  Method,
  MethodBlockDto,
  RankingDto,
  ResultsPayload,
} from "../src/types.js";

export function estimateDto(
  method: Method,
  omega: number[],
  domega: number[],
): EstimateDto {
  return {
    kind: "estimate",
    method,
    c: 1,
    lam: 1,
    normalized: true,
    omega_star: omega.slice(),
    delta: omega.map(() => 0),
    omega: omega.slice(),
    domega: domega.slice(),
  };
}

export function rankingDto(order: number[], warnings: number[][]): RankingDto {
  return { kind: "ranking", sigma: 1, order, verdicts: [], warnings };
}

export function methodBlock(
  method: Method,
  omega: number[],
  domega: number[],
  warnings: number[][] = [],
): MethodBlockDto {
  const order = omega
    .map((w, i) => [w, i] as const)
    .sort((a, b) => b[0] - a[0])
    .map(([, i]) => i);
  return {
    estimate: estimateDto(method, omega, domega),
    ranking: rankingDto(order, warnings),
  };
}

export interface PayloadSpec {
  labels?: string[];
  revision?: number;
  whatIf?: boolean;
  gmm?: MethodBlockDto;
  em?: MethodBlockDto;
}

export function resultsPayload(spec: PayloadSpec = {}): ResultsPayload {
  const labels = spec.labels ?? ["A", "B", "C"];
  const n = labels.length;
  const matrix = Array.from({ length: n }, () => Array.from({ length: n }, () => 1));
  return {
    schema_version: 1,
    id: "fixture",
    revision: spec.revision ?? 0,
    what_if: spec.whatIf ?? false,
    labels,
    matrix,
    results: {
      ...(spec.gmm ? { gmm: spec.gmm } : {}),
      ...(spec.em ? { em: spec.em } : {}),
    },
  };
}
