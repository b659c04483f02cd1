/** Shared types for the designer: editor state, events, service payloads. */

export interface Point {
  x: number
  y: number
}

/**
 * The whole editable document.  Control points live in screen space; the
 * service is affine-equivariant, so screen coordinates go to /curve as-is
 * and the response comes back in the same frame (no local curve math).
 */
export interface EditorState {
  controlPoints: Point[]
  selected: number | null
  b: number
  s: number
  n: number
  sampleDensity: number
  /** rational string probed via GET /unified, rendered verbatim */
  probeX: string
  canvas: { width: number; height: number }
}

export type EditorEvent =
  | { kind: 'select'; index: number }
  | { kind: 'deselect' }
  | { kind: 'drag'; position: Point }
  | { kind: 'add-point'; position: Point }
  | { kind: 'remove-point'; index: number }
  | { kind: 'set-param'; name: 'b' | 's' | 'n' | 'sampleDensity'; value: number }
  | { kind: 'set-probe-x'; value: string }

/** POST /curve response; stored and rendered verbatim. */
export interface CurveResponse {
  control_points: number[][]
  samples: { t: number; p: number[] }[]
}

/** GET /unified response; both strings rendered verbatim. */
export interface UnifiedResponse {
  decimal: string
  exact: string
}
