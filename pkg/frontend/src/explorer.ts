/** Solver-explorer data helpers: matrix heat colors and the elimination
 * step-through, all pure so the stepper is testable. */

import type { MatrixDoc, ReductionStepDoc } from "./types.js";

export function heatColor(value: number): string {
  return value >= 1 ? "#2e8b57" : "#f4f4f4";
}

export interface TraceState {
  note: string;
  matrix: MatrixDoc;
}

function dropRow(matrix: MatrixDoc, label: string): MatrixDoc {
  const index = matrix.rows.indexOf(label);
  return {
    rows: matrix.rows.filter((_, i) => i !== index),
    cols: [...matrix.cols],
    entries: matrix.entries.filter((_, i) => i !== index),
  };
}

function dropColumn(matrix: MatrixDoc, label: string): MatrixDoc {
  const index = matrix.cols.indexOf(label);
  return {
    rows: [...matrix.rows],
    cols: matrix.cols.filter((_, j) => j !== index),
    entries: matrix.entries.map((row) => row.filter((_, j) => j !== index)),
  };
}

/** Apply the elimination steps one by one, yielding a state per step. */
export function traceStates(initial: MatrixDoc, steps: ReductionStepDoc[]): TraceState[] {
  const states: TraceState[] = [{ note: "initial matrix", matrix: initial }];
  let current = initial;
  for (const step of steps) {
    if (step.kind === "dominated-row") {
      current = dropRow(current, step.removed);
      states.push({
        note: `dropped row ${step.removed} (weakly dominated by ${step.justifiedBy})`,
        matrix: current,
      });
    } else {
      current = dropColumn(current, step.removed);
      states.push({
        note: `dropped column ${step.removed} (duplicate of ${step.justifiedBy})`,
        matrix: current,
      });
    }
  }
  return states;
}
