/** Typed HTTP client; the single place game truth enters the UI. */
export class ApiError extends Error {
    constructor(status, code, message) {
        super(message);
        this.status = status;
        this.code = code;
        this.name = "ApiError";
    }
}
export class ApiClient {
    constructor(baseUrl, fetchImpl = (input, init) => fetch(input, init), onResponse) {
        this.baseUrl = baseUrl;
        this.fetchImpl = fetchImpl;
        this.onResponse = onResponse;
    }
    async request(method, path, body) {
        const init = { method, headers: {} };
        if (body !== undefined) {
            init.headers = { "Content-Type": "application/json" };
            init.body = JSON.stringify(body);
        }
        const response = await this.fetchImpl(`${this.baseUrl}${path}`, init);
        const payload = await response.json();
        if (!response.ok) {
            const detail = payload.error;
            throw new ApiError(response.status, detail?.code ?? "unknown", detail?.message ?? `request failed with ${response.status}`);
        }
        this.onResponse?.(path, payload);
        return payload;
    }
    health() {
        return this.request("GET", "/health");
    }
    createSession(host, seed) {
        const body = { host };
        if (seed !== undefined)
            body.seed = seed;
        return this.request("POST", "/sessions", body);
    }
    pick(sessionId, door) {
        return this.request("POST", `/sessions/${sessionId}/pick`, { door });
    }
    advice(sessionId) {
        return this.request("GET", `/sessions/${sessionId}/advice`);
    }
    final(sessionId, action) {
        return this.request("POST", `/sessions/${sessionId}/final`, { action });
    }
    stats(sessionId) {
        return this.request("GET", `/sessions/${sessionId}/stats`);
    }
    transcript(sessionId) {
        return this.request("GET", `/sessions/${sessionId}/transcript`);
    }
    solveZerosum() {
        return this.request("POST", "/solve/zerosum", {});
    }
    solveBayes(host) {
        return this.request("POST", "/solve/bayes", host);
    }
    solveNash(body) {
        return this.request("POST", "/solve/nash", body);
    }
    matrix() {
        return this.request("GET", "/matrix");
    }
    matrixReduced() {
        return this.request("GET", "/matrix/reduced");
    }
}
