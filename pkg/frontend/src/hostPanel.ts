/** Host configuration helpers: sliders to exact rational strings. */

import type { HostConfig } from "./types.js";

/** Renormalize integer slider values into exact prior strings a/total.
 * All-zero sliders fall back to the uniform prior. */
export function renormalizedPi(sliders: number[]): string[] {
  const total = sliders.reduce((a, b) => a + b, 0);
  if (total === 0) return ["1/3", "1/3", "1/3"];
  return sliders.map((value) => `${value}/${total}`);
}

/** Percent sliders (0..100) to exact bias strings. */
export function lambdaStrings(sliders: number[]): string[] {
  return sliders.map((value) => {
    if (value <= 0) return "0";
    if (value >= 100) return "1";
    return `${value}/100`;
  });
}

export function hostConfigFromSliders(piSliders: number[], lambdaSliders: number[]): HostConfig {
  return { pi: renormalizedPi(piSliders), lambda: lambdaStrings(lambdaSliders) };
}

export function isCrawl(lambdas: string[]): boolean {
  return lambdas.every((l) => l === "1");
}

/** A zero prior makes some information sets unreachable; warn, don't block. */
export function degenerateWarning(pi: string[]): string | null {
  return pi.some((p) => p === "0" || p.startsWith("0/"))
    ? "a zero prior makes some information sets unreachable"
    : null;
}
