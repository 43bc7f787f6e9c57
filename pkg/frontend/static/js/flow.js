/** Headless round flow: drives pick -> (advice) -> final against the
 * service and mirrors the public session view.  The UI layer renders
 * snapshots of this state; tests drive it directly. */
import { ApiError } from "./api.js";
function initialState() {
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
    constructor(client) {
        this.client = client;
        this.state = initialState();
        this.listeners = [];
        /** Client-side record of every resolved round, for transcript audits. */
        this.log = [];
    }
    getState() {
        return { ...this.state, rateHistory: [...this.state.rateHistory] };
    }
    subscribe(listener) {
        this.listeners.push(listener);
        return () => {
            this.listeners = this.listeners.filter((l) => l !== listener);
        };
    }
    emit(patch) {
        this.state = { ...this.state, ...patch };
        for (const listener of this.listeners)
            listener(this.getState());
    }
    async startSession(host, seed) {
        this.state = initialState();
        this.emit({ busy: true });
        try {
            const created = await this.client.createSession(host, seed);
            this.log.length = 0;
            this.emit({
                sessionId: created.id,
                phase: created.phase,
                round: created.round,
                busy: false,
            });
        }
        catch (error) {
            this.emit({ busy: false, notice: describeError(error) });
            throw error;
        }
    }
    /** One in-flight mutation at a time; extra clicks are ignored. */
    canMutate(expected) {
        return (this.state.sessionId !== null &&
            !this.state.busy &&
            expected.includes(this.state.phase));
    }
    async pickDoor(door) {
        if (!this.canMutate(["awaiting-pick", "done"]))
            return;
        const sessionId = this.state.sessionId;
        this.emit({ busy: true, notice: null });
        try {
            const picked = await this.client.pick(sessionId, door);
            this.emit({
                phase: picked.phase,
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
        }
        catch (error) {
            await this.recover(error);
        }
    }
    async decide(action) {
        if (!this.canMutate(["awaiting-final"]))
            return;
        const sessionId = this.state.sessionId;
        this.emit({ busy: true });
        try {
            const outcome = await this.client.final(sessionId, action);
            this.log.push({
                round: outcome.round,
                pick: this.state.pick,
                offered: this.state.offered,
                revealed: this.state.revealed,
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
                rateHistory: rate === null ? this.state.rateHistory : [...this.state.rateHistory, rate],
                adviceAvailable: outcome.stats.rounds >= 1,
                advice: null,
                busy: false,
            });
        }
        catch (error) {
            await this.recover(error);
        }
    }
    toggleAdvice() {
        this.emit({ adviceEnabled: !this.state.adviceEnabled });
    }
    /** Conflicts are non-blocking: show a notice and resync from the server. */
    async recover(error) {
        const notice = describeError(error);
        if (error instanceof ApiError && this.state.sessionId) {
            try {
                const stats = await this.client.stats(this.state.sessionId);
                this.emit({
                    busy: false,
                    notice,
                    phase: stats.phase ?? this.state.phase,
                    round: stats.round ?? this.state.round,
                    rounds: stats.rounds,
                    wins: stats.wins,
                    adviceAvailable: stats.rounds >= 1,
                });
                return;
            }
            catch {
                // fall through to the plain notice
            }
        }
        this.emit({ busy: false, notice });
    }
}
export function describeError(error) {
    if (error instanceof ApiError)
        return `${error.code}: ${error.message}`;
    return error instanceof Error ? error.message : String(error);
}
