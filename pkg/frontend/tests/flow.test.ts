/** Round-flow state machine against a scripted fake service. */

import { describe, expect, it } from "vitest";

import { ApiError } from "../src/api.js";
import { RoundFlow, type FlowClient } from "../src/flow.js";
import type {
  AdviceResponse,
  FinalResponse,
  PickResponse,
  SessionCreated,
  StatsResponse,
  TranscriptResponse,
} from "../src/types.js";

const ADVICE: AdviceResponse = {
  posteriorSwitchWin: { exact: "2/3", decimal: 2 / 3 },
  recommendedAction: "switch",
  bayesValueForPriors: { exact: "2/3", decimal: 2 / 3 },
  bestPickForPriors: [1, 2, 3],
};

/** Deterministic fake: prize always behind door 2, crawl-style offers. */
class FakeService implements FlowClient {
  round = 1;
  phase = "awaiting-pick";
  rounds = 0;
  wins = 0;
  lastPick = 0;
  adviceCalls = 0;

  async createSession(): Promise<SessionCreated> {
    return {
      id: "fake",
      phase: "awaiting-pick",
      round: 1,
      commitment: "c".repeat(64),
      host: { pi: ["1/3", "1/3", "1/3"], lambda: ["1/2", "1/2", "1/2"] },
    };
  }

  async pick(_id: string, door: number): Promise<PickResponse> {
    if (this.phase !== "awaiting-pick" && this.phase !== "done") {
      throw new ApiError(409, "wrong-phase", "pick out of turn");
    }
    if (this.phase === "done") this.round += 1;
    this.phase = "awaiting-final";
    this.lastPick = door;
    const offered = door === 2 ? 1 : 2;
    const revealed = [1, 2, 3].find((d) => d !== door && d !== offered)!;
    return { phase: this.phase, round: this.round, pick: door, offered, revealed };
  }

  async advice(): Promise<AdviceResponse> {
    this.adviceCalls += 1;
    return ADVICE;
  }

  async final(_id: string, action: "hold" | "switch"): Promise<FinalResponse> {
    if (this.phase !== "awaiting-final") {
      throw new ApiError(409, "wrong-phase", "final out of turn");
    }
    this.phase = "done";
    const finalDoor = action === "hold" ? this.lastPick : this.lastPick === 2 ? 1 : 2;
    const win = finalDoor === 2;
    this.rounds += 1;
    if (win) this.wins += 1;
    return {
      phase: "done",
      round: this.round,
      theta: 2,
      final: finalDoor,
      win,
      reveal: { nonce: "n", strategy: "21" },
      nextCommitment: "d".repeat(64),
      stats: this.statsBody(),
    };
  }

  private statsBody(): StatsResponse {
    return {
      rounds: this.rounds,
      wins: this.wins,
      winRate: this.rounds ? this.wins / this.rounds : null,
      perInfoSet: {},
      phase: this.phase,
      round: this.round,
    };
  }

  async stats(): Promise<StatsResponse> {
    return this.statsBody();
  }

  async transcript(): Promise<TranscriptResponse> {
    throw new Error("not used in this fake");
  }
}

describe("RoundFlow", () => {
  it("walks pick -> final and logs the round", async () => {
    const service = new FakeService();
    const flow = new RoundFlow(service);
    await flow.startSession({ pi: ["1/3", "1/3", "1/3"], lambda: ["1/2", "1/2", "1/2"] });
    expect(flow.getState().phase).toBe("awaiting-pick");

    await flow.pickDoor(1);
    const mid = flow.getState();
    expect(mid.phase).toBe("awaiting-final");
    expect(mid.offered).toBe(2);
    expect(mid.revealed).toBe(3);

    await flow.decide("switch");
    const done = flow.getState();
    expect(done.phase).toBe("done");
    expect(done.lastResult).toEqual({ theta: 2, final: 2, win: true });
    expect(done.rounds).toBe(1);
    expect(done.rateHistory).toEqual([1]);
    expect(flow.log).toHaveLength(1);
    expect(flow.log[0]).toMatchObject({ round: 1, pick: 1, offered: 2, theta: 2, win: true });
  });

  it("keeps advice hidden until the first round completes", async () => {
    const service = new FakeService();
    const flow = new RoundFlow(service);
    await flow.startSession({ pure: "21" });
    expect(flow.getState().adviceAvailable).toBe(false);

    await flow.pickDoor(1);
    expect(service.adviceCalls).toBe(0); // not enabled, not fetched
    await flow.decide("hold");
    expect(flow.getState().adviceAvailable).toBe(true);
    expect(flow.log[0]?.adviceShown).toBeUndefined();

    flow.toggleAdvice();
    await flow.pickDoor(1);
    expect(service.adviceCalls).toBe(1);
    expect(flow.getState().advice).toEqual(ADVICE);
    await flow.decide("switch");
    expect(flow.log[1]?.adviceShown).toBe("2/3");
  });

  it("ignores moves made out of phase", async () => {
    const service = new FakeService();
    const flow = new RoundFlow(service);
    await flow.startSession({ pure: "21" });
    await flow.decide("switch"); // nothing picked yet: no-op client-side
    expect(flow.getState().phase).toBe("awaiting-pick");
    await flow.pickDoor(2);
    await flow.pickDoor(3); // second pick ignored
    expect(flow.getState().pick).toBe(2);
  });

  it("resyncs from the server after a conflict", async () => {
    const service = new FakeService();
    const flow = new RoundFlow(service);
    await flow.startSession({ pure: "21" });
    // Sabotage: service thinks we're mid-round, flow thinks we're not.
    service.phase = "awaiting-final";
    await flow.pickDoor(1);
    const state = flow.getState();
    expect(state.notice).toContain("wrong-phase");
    expect(state.phase).toBe("awaiting-final"); // resynced from stats
    expect(state.busy).toBe(false);
  });
});
