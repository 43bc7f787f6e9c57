/** Wire types for the montyhall HTTP service. */

export interface RationalDoc {
  exact: string;
  decimal: number;
}

export interface HostConfig {
  pi: string[];
  lambda: string[];
}

export type HostSpec = HostConfig | { mixed: string[] } | { pure: string };

export interface SessionCreated {
  id: string;
  phase: string;
  round: number;
  commitment: string;
  host: HostConfig;
}

export interface PickResponse {
  phase: string;
  round: number;
  pick: number;
  offered: number;
  revealed: number;
}

export type Recommendation = "switch" | "hold" | "indifferent";

export interface AdviceResponse {
  posteriorSwitchWin: RationalDoc;
  recommendedAction: Recommendation;
  bayesValueForPriors: RationalDoc;
  bestPickForPriors: number[];
}

export interface InfoSetTally {
  visits: number;
  switchWins: number;
  holdWins: number;
}

export interface StatsResponse {
  rounds: number;
  wins: number;
  winRate: number | null;
  perInfoSet: Record<string, InfoSetTally>;
  phase?: string;
  round?: number;
}

export interface FinalResponse {
  phase: string;
  round: number;
  theta: number;
  final: number;
  win: boolean;
  reveal: { nonce: string; strategy: string };
  nextCommitment: string;
  stats: StatsResponse;
}

export interface TranscriptRound {
  round: number;
  theta: number;
  pick: number;
  offered: number;
  revealed: number;
  final: number;
  win: boolean;
  nonce: string;
  commitment: string;
}

export interface TranscriptResponse {
  id: string;
  seed: number;
  host: HostConfig;
  rounds: TranscriptRound[];
  current: Record<string, unknown>;
}

export interface MatrixDoc {
  rows: string[];
  cols: string[];
  entries: number[][];
}

export interface ReductionStepDoc {
  kind: "dominated-row" | "duplicate-column";
  removed: string;
  justifiedBy: string;
}

export interface ReducedDoc {
  steps: ReductionStepDoc[];
  terminal: MatrixDoc;
}

export interface ZeroSumDoc {
  value: string;
  valueDecimal: number;
  conieMinimax: string[];
  monteMinimax: string[];
  conieCertificate: string[];
  monteCertificate: string[];
}

export interface BayesDoc {
  host: HostConfig;
  value: RationalDoc;
  pureBestResponses: string[];
  bestPicks: number[];
}

export interface NashProfileDoc {
  p: string[];
  q: string[];
  coniePayoff: string;
  montePayoff: string;
  conieRowPayoffs: string[];
  monteColPayoffs: string[];
}

export interface NashFamilyDoc {
  case: number;
  leastLikelyDoors: number[];
  weightVertices: string[][];
  representative: NashProfileDoc;
}

export interface NashDoc {
  fullySupportedFamilies: NashFamilyDoc[];
  profiles?: NashProfileDoc[];
}

export interface ApiErrorBody {
  error: { code: string; message: string };
}
