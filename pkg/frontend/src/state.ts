/**
 * Pure state transitions for the designer.
 *
 * `update` is a pure function of (state, event): no IO, no clocks, no
 * randomness, and every state is plain JSON data.  Replaying an event log
 * therefore reproduces the final state bit for bit, which is what the
 * replay test asserts and what makes undo trivial (drop the last event and
 * replay).
 */

import type { EditorEvent, EditorState, Point } from './types.js'

export const PARAM_LIMITS = {
  b: { min: 1, max: 4 },
  s: { min: 1, max: 4 },
  n: { min: 1, max: 64 },
  sampleDensity: { min: 2, max: 257 },
} as const

const MIN_POINTS = 2

export function initialState(width: number, height: number): EditorState {
  // the classic demo cubic, mapped into the canvas with a margin
  const mx = width * 0.15
  const my = height * 0.15
  const w = width - 2 * mx
  const h = height - 2 * my
  return {
    controlPoints: [
      { x: mx, y: my + h },
      { x: mx, y: my },
      { x: mx + w, y: my },
      { x: mx + w, y: my + h },
    ],
    selected: null,
    b: 1,
    s: 1,
    n: 3,
    sampleDensity: 65,
    probeX: '1/2',
    canvas: { width, height },
  }
}

function clampToCanvas(state: EditorState, p: Point): Point {
  return {
    x: Math.min(Math.max(p.x, 0), state.canvas.width),
    y: Math.min(Math.max(p.y, 0), state.canvas.height),
  }
}

function clampParam(name: keyof typeof PARAM_LIMITS, value: number): number {
  const { min, max } = PARAM_LIMITS[name]
  return Math.min(Math.max(Math.round(value), min), max)
}

export function update(state: EditorState, event: EditorEvent): EditorState {
  switch (event.kind) {
    case 'select': {
      if (event.index < 0 || event.index >= state.controlPoints.length) return state
      return { ...state, selected: event.index }
    }
    case 'deselect':
      return { ...state, selected: null }
    case 'drag': {
      if (state.selected === null) return state
      const clamped = clampToCanvas(state, event.position)
      const controlPoints = state.controlPoints.map((p, i) =>
        i === state.selected ? clamped : p,
      )
      return { ...state, controlPoints }
    }
    case 'add-point': {
      const controlPoints = [...state.controlPoints, clampToCanvas(state, event.position)]
      return { ...state, controlPoints, selected: controlPoints.length - 1 }
    }
    case 'remove-point': {
      if (state.controlPoints.length <= MIN_POINTS) return state
      if (event.index < 0 || event.index >= state.controlPoints.length) return state
      const controlPoints = state.controlPoints.filter((_, i) => i !== event.index)
      return { ...state, controlPoints, selected: null }
    }
    case 'set-param':
      return { ...state, [event.name]: clampParam(event.name, event.value) }
    case 'set-probe-x':
      return { ...state, probeX: event.value }
  }
}

/** Fold an event log over an initial state; the backbone of undo and replay. */
export function replay(initial: EditorState, events: readonly EditorEvent[]): EditorState {
  return events.reduce(update, initial)
}
