/**
 * DOM wiring: pointer events -> pure state transitions -> debounced service
 * fetches -> render.  The app keeps the full event log, so undo is "drop
 * the last pointer gesture and replay".
 */

import { DebouncedCurveFetcher, ServiceClient } from './client.js'
import { renderBlendingPanel, renderScene, type Scene } from './render.js'
import { initialState, replay, update, PARAM_LIMITS } from './state.js'
import type { EditorEvent, EditorState, Point } from './types.js'

const servicePort = new URLSearchParams(location.search).get('port') ?? '8787'
const SERVICE_URL = `http://${location.hostname || '127.0.0.1'}:${servicePort}`
const HIT_RADIUS = 12

function requireElement<T extends Element>(selector: string): T {
  const el = document.querySelector<T>(selector)
  if (el === null) throw new Error(`missing element ${selector}`)
  return el
}

const canvas = requireElement<HTMLCanvasElement>('#editor')
const panel = requireElement<HTMLCanvasElement>('#blending')
const ctx = canvas.getContext('2d')!
const panelCtx = panel.getContext('2d')!

const client = new ServiceClient(SERVICE_URL)

let state: EditorState = initialState(canvas.width, canvas.height)
let eventLog: EditorEvent[] = []
const scene: Scene = { curve: null, basis: null, error: null }
let gestureStartLog = 0

function dispatch(event: EditorEvent): void {
  eventLog.push(event)
  state = update(state, event)
}

const fetcher = new DebouncedCurveFetcher(client, {
  onCurve(curve) {
    scene.curve = curve
    scene.error = null
    draw()
  },
  onError(message) {
    scene.error = message // last good curve stays on screen
    draw()
  },
})

function refetchCurve(): void {
  fetcher.schedule(state.controlPoints, state.sampleDensity)
}

async function refetchBasis(): Promise<void> {
  const xs = Array.from({ length: 33 }, (_, i) => i / 32)
  try {
    const profiles = await client.basisProfiles(state.n, xs)
    scene.basis = { xs, profiles }
    scene.error = null
  } catch (error) {
    scene.error = error instanceof Error ? error.message : String(error)
  }
  draw()
}

async function refreshUnified(): Promise<void> {
  const out = requireElement<HTMLElement>('#unified-value')
  const note = requireElement<HTMLElement>('#unified-note')
  try {
    const value = await client.unified(state.n, state.b, state.s, state.probeX)
    out.textContent = `${value.exact}  (= ${value.decimal})`
    note.textContent =
      state.n < state.b * state.s ? 'n < b*s: this member vanishes identically' : ''
  } catch (error) {
    out.textContent = '—'
    note.textContent = error instanceof Error ? error.message : String(error)
  }
}

function draw(): void {
  renderScene(ctx, state, scene)
  renderBlendingPanel(panelCtx, panel.width, panel.height, scene.basis)
}

function canvasPosition(event: PointerEvent): Point {
  const rect = canvas.getBoundingClientRect()
  return { x: event.clientX - rect.left, y: event.clientY - rect.top }
}

function hitTest(p: Point): number | null {
  for (let i = state.controlPoints.length - 1; i >= 0; i--) {
    const q = state.controlPoints[i]!
    if (Math.hypot(q.x - p.x, q.y - p.y) <= HIT_RADIUS) return i
  }
  return null
}

canvas.addEventListener('pointerdown', (event) => {
  const p = canvasPosition(event)
  const hit = hitTest(p)
  gestureStartLog = eventLog.length
  if (hit !== null) {
    dispatch({ kind: 'select', index: hit })
    canvas.setPointerCapture(event.pointerId)
  } else {
    dispatch({ kind: 'add-point', position: p })
    refetchCurve()
  }
  draw()
})

canvas.addEventListener('pointermove', (event) => {
  if (state.selected === null || !canvas.hasPointerCapture(event.pointerId)) return
  dispatch({ kind: 'drag', position: canvasPosition(event) })
  refetchCurve()
  draw()
})

canvas.addEventListener('pointerup', (event) => {
  if (canvas.hasPointerCapture(event.pointerId)) canvas.releasePointerCapture(event.pointerId)
  dispatch({ kind: 'deselect' })
  fetcher.flush()
  draw()
})

requireElement<HTMLButtonElement>('#remove-point').addEventListener('click', () => {
  const index = state.selected ?? state.controlPoints.length - 1
  dispatch({ kind: 'remove-point', index })
  refetchCurve()
  draw()
})

requireElement<HTMLButtonElement>('#undo').addEventListener('click', () => {
  // drop the last gesture and replay: purity makes this exact
  eventLog = eventLog.slice(0, gestureStartLog)
  state = replay(initialState(canvas.width, canvas.height), eventLog)
  refetchCurve()
  draw()
})

for (const name of ['b', 's', 'n'] as const) {
  const input = requireElement<HTMLInputElement>(`#param-${name}`)
  input.min = String(PARAM_LIMITS[name].min)
  input.max = String(PARAM_LIMITS[name].max)
  input.addEventListener('input', () => {
    dispatch({ kind: 'set-param', name, value: Number(input.value) })
    requireElement<HTMLElement>(`#param-${name}-value`).textContent = String(state[name])
    void refreshUnified()
    if (name === 'n') void refetchBasis()
  })
}

requireElement<HTMLInputElement>('#probe-x').addEventListener('change', (event) => {
  dispatch({ kind: 'set-probe-x', value: (event.target as HTMLInputElement).value })
  void refreshUnified()
})

refetchCurve()
void refetchBasis()
void refreshUnified()
draw()
