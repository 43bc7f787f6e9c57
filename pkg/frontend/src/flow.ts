/** Headless round flow: drives pick -> (advice) -> final against the
 * service and mirrors the public session view.  The UI layer renders
 * snapshots of this state; tests drive it directly. */

import { ApiError } from "./api.js";
import type {
  AdviceResponse,
  FinalResponse,
  HostSpec,
  PickResponse,
  SessionCreated,
  StatsResponse,
  TranscriptResponse,
} from "./types.js";

/** The subset of the API client the flow needs (injectable for tests). */
export interface FlowClient {
  createSession(host: HostSpec, seed?: number): Promise<SessionCreated>;
  pick(sessionId: string, door: number): Promise<PickResponse>;
  advice(sessionId: string): Promise<AdviceResponse>;
  final(sessionId: string, action: "hold" | "switch"): Promise<FinalResponse>;
  stats(sessionId: string): Promise<StatsResponse>;
  transcript(sessionId: string): Promise<TranscriptResponse>;
}

export type Phase = "idle" | "awaiting-pick" | "awaiting-final" | "done";

export interface RoundLogEntry {
  round: number;
  pick: number;
  offered: number;
  revealed: number;
  theta: number;
  final: number;
  win: boolean;
  /** Exact posterior string shown in the advice panel, if advice was on. */
  adviceShown?: string;
}

export interface UiSessionState {
  sessionId: string | null;
  phase: Phase;
  round: number;
  pick: number | null;
  offered: number | null;
  revealed: number | null;
  lastResult: { theta: number; final: number; win: boolean } | null;
  rounds: number;
  wins: number;
  /** Running win rates after each completed round, for the chart. */
  rateHistory: number[];
  adviceEnabled: boolean;
  /** Advice becomes toggleable after the first unaided round. */
  adviceAvailable: boolean;
  advice: AdviceResponse | null;
  busy: boolean;
  notice: string | null;
}

function initialState(): UiSessionState {
  return {
    sessionId: null,
    phase: "idle",
    round: 0,
    pick: null,
    offered: null,
    revealed: null,
    lastResult: null,
    rounds: 0,
    wins: 0,
    rateHistory: [],
    adviceEnabled: false,
    adviceAvailable: false,
    advice: null,
    busy: false,
    notice: null,
  };
}

export class RoundFlow {
  private state: UiSessionState = initialState();
  private listeners: Array<(state: UiSessionState) => void> = [];
  /** Client-side record of every resolved round, for transcript audits. */
  readonly log: RoundLogEntry[] = [];

  constructor(private readonly client: FlowClient) {}

  getState(): UiSessionState {
    return { ...this.state, rateHistory: [...this.state.rateHistory] };
  }

  subscribe(listener: (state: UiSessionState) => void): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private emit(patch: Partial<UiSessionState>): void {
    this.state = { ...this.state, ...patch };
    for (const listener of this.listeners) listener(this.getState());
  }

  async startSession(host: HostSpec, seed?: number): Promise<void> {
    this.state = initialState();
    this.emit({ busy: true });
    try {
      const created = await this.client.createSession(host, seed);
      this.log.length = 0;
      this.emit({
        sessionId: created.id,
        phase: created.phase as Phase,
        round: created.round,
        busy: false,
      });
    } catch (error) {
      this.emit({ busy: false, notice: describeError(error) });
      throw error;
    }
  }

  /** One in-flight mutation at a time; extra clicks are ignored. */
  private canMutate(expected: Phase[]): boolean {
    return (
      this.state.sessionId !== null &&
      !this.state.busy &&
      expected.includes(this.state.phase)
    );
  }

  async pickDoor(door: number): Promise<void> {
    if (!this.canMutate(["awaiting-pick", "done"])) return;
    const sessionId = this.state.sessionId!;
    this.emit({ busy: true, notice: null });
    try {
      const picked = await this.client.pick(sessionId, door);
      this.emit({
        phase: picked.phase as Phase,
        round: picked.round,
        pick: picked.pick,
        offered: picked.offered,
        revealed: picked.revealed,
        advice: null,
        busy: false,
      });
      if (this.state.adviceEnabled) {
        const advice = await this.client.advice(sessionId);
        this.emit({ advice });
      }
    } catch (error) {
      await this.recover(error);
    }
  }

  async decide(action: "hold" | "switch"): Promise<void> {
    if (!this.canMutate(["awaiting-final"])) return;
    const sessionId = this.state.sessionId!;
    this.emit({ busy: true });
    try {
      const outcome = await this.client.final(sessionId, action);
      this.log.push({
        round: outcome.round,
        pick: this.state.pick!,
        offered: this.state.offered!,
        revealed: this.state.revealed!,
        theta: outcome.theta,
        final: outcome.final,
        win: outcome.win,
        adviceShown: this.state.advice?.posteriorSwitchWin.exact,
      });
      const rate = outcome.stats.winRate;
      this.emit({
        phase: "done",
        lastResult: { theta: outcome.theta, final: outcome.final, win: outcome.win },
        rounds: outcome.stats.rounds,
        wins: outcome.stats.wins,
        rateHistory:
          rate === null ? this.state.rateHistory : [...this.state.rateHistory, rate],
        adviceAvailable: outcome.stats.rounds >= 1,
        advice: null,
        busy: false,
      });
    } catch (error) {
      await this.recover(error);
    }
  }

  toggleAdvice(): void {
    this.emit({ adviceEnabled: !this.state.adviceEnabled });
  }

  /** Conflicts are non-blocking: show a notice and resync from the server. */
  private async recover(error: unknown): Promise<void> {
    const notice = describeError(error);
    if (error instanceof ApiError && this.state.sessionId) {
      try {
        const stats = await this.client.stats(this.state.sessionId);
        this.emit({
          busy: false,
          notice,
          phase: (stats.phase as Phase) ?? this.state.phase,
          round: stats.round ?? this.state.round,
          rounds: stats.rounds,
          wins: stats.wins,
          adviceAvailable: stats.rounds >= 1,
        });
        return;
      } catch {
        // fall through to the plain notice
      }
    }
    this.emit({ busy: false, notice });
  }
}

export function describeError(error: unknown): string {
  if (error instanceof ApiError) return `${error.code}: ${error.message}`;
  return error instanceof Error ? error.message : String(error);
}
