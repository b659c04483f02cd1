import { describe, expect, it } from 'vitest'

import { initialState, replay, update, PARAM_LIMITS } from '../src/state.js'
import type { EditorEvent, EditorState } from '../src/types.js'

const WIDTH = 640
const HEIGHT = 480

function start(): EditorState {
  return initialState(WIDTH, HEIGHT)
}

const SAMPLE_LOG: EditorEvent[] = [
  { kind: 'select', index: 1 },
  { kind: 'drag', position: { x: 200, y: 50 } },
  { kind: 'drag', position: { x: 220, y: 40 } },
  { kind: 'deselect' },
  { kind: 'add-point', position: { x: 500, y: 400 } },
  { kind: 'set-param', name: 'b', value: 2 },
  { kind: 'set-param', name: 'n', value: 7 },
  { kind: 'set-probe-x', value: '2/3' },
  { kind: 'select', index: 0 },
  { kind: 'drag', position: { x: -40, y: 9999 } },
  { kind: 'remove-point', index: 2 },
]

describe('event-log replay', () => {
  it('is deterministic: replaying the same log twice gives identical states', () => {
    const a = replay(start(), SAMPLE_LOG)
    const b = replay(start(), SAMPLE_LOG)
    expect(a).toEqual(b)
  })

  it('states are plain serializable data', () => {
    const final = replay(start(), SAMPLE_LOG)
    expect(JSON.parse(JSON.stringify(final))).toEqual(final)
  })

  it('incremental updates equal one-shot replay', () => {
    let incremental = start()
    for (const event of SAMPLE_LOG) incremental = update(incremental, event)
    expect(incremental).toEqual(replay(start(), SAMPLE_LOG))
  })

  it('drag then undo (replay without the drag) restores the pre-drag state', () => {
    const prefix: EditorEvent[] = [{ kind: 'select', index: 1 }]
    const preDrag = replay(start(), prefix)
    const dragged = update(preDrag, { kind: 'drag', position: { x: 300, y: 300 } })
    expect(dragged.controlPoints).not.toEqual(preDrag.controlPoints)
    expect(replay(start(), prefix)).toEqual(preDrag)
  })
})

describe('update', () => {
  it('does not mutate its input', () => {
    const before = start()
    const snapshot = JSON.parse(JSON.stringify(before))
    update(update(before, { kind: 'select', index: 0 }), {
      kind: 'drag',
      position: { x: 1, y: 1 },
    })
    expect(before).toEqual(snapshot)
  })

  it('drag moves only the selected point', () => {
    let state = update(start(), { kind: 'select', index: 2 })
    state = update(state, { kind: 'drag', position: { x: 321, y: 123 } })
    expect(state.controlPoints[2]).toEqual({ x: 321, y: 123 })
    expect(state.controlPoints[0]).toEqual(start().controlPoints[0])
  })

  it('drag without a selection is a no-op', () => {
    const state = update(start(), { kind: 'drag', position: { x: 1, y: 2 } })
    expect(state).toEqual(start())
  })

  it('out-of-canvas drags clamp to the canvas bounds', () => {
    let state = update(start(), { kind: 'select', index: 0 })
    state = update(state, { kind: 'drag', position: { x: -50, y: HEIGHT + 500 } })
    expect(state.controlPoints[0]).toEqual({ x: 0, y: HEIGHT })
  })

  it('keeps at least two control points', () => {
    let state = start()
    for (let i = 0; i < 10; i++) {
      state = update(state, { kind: 'remove-point', index: 0 })
    }
    expect(state.controlPoints.length).toBe(2)
  })

  it('clamps family parameters to their ranges', () => {
    let state = update(start(), { kind: 'set-param', name: 'b', value: 99 })
    expect(state.b).toBe(PARAM_LIMITS.b.max)
    state = update(state, { kind: 'set-param', name: 's', value: -3 })
    expect(state.s).toBe(PARAM_LIMITS.s.min)
    state = update(state, { kind: 'set-param', name: 'sampleDensity', value: 1 })
    expect(state.sampleDensity).toBe(PARAM_LIMITS.sampleDensity.min)
  })

  it('select validates the index', () => {
    const state = update(start(), { kind: 'select', index: 17 })
    expect(state.selected).toBeNull()
  })

  it('default polygon is the demo cubic shape', () => {
    const points = start().controlPoints
    expect(points.length).toBe(4)
    // endpoints at the bottom, inner points at the top
    expect(points[0]!.y).toBeGreaterThan(points[1]!.y)
    expect(points[3]!.y).toBeGreaterThan(points[2]!.y)
  })
})
