/**
 * Canvas drawing.  Everything numeric here arrived from the service; this
 * module only applies linear screen transforms (panel scaling) and styling.
 * On service errors the last good scene stays up behind a visible banner.
 */

import type { CurveResponse, EditorState } from './types.js'

export interface Scene {
  curve: CurveResponse | null
  /** blending values per x-sample (outer) and basis index j (inner) */
  basis: { xs: number[]; profiles: number[][] } | null
  error: string | null
}

const HANDLE_RADIUS = 7

export function renderScene(
  ctx: CanvasRenderingContext2D,
  state: EditorState,
  scene: Scene,
): void {
  const { width, height } = state.canvas
  ctx.clearRect(0, 0, width, height)

  // control polygon
  ctx.strokeStyle = '#b9b9b9'
  ctx.lineWidth = 1
  ctx.beginPath()
  state.controlPoints.forEach((p, i) => (i === 0 ? ctx.moveTo(p.x, p.y) : ctx.lineTo(p.x, p.y)))
  ctx.stroke()

  // curve from the service, verbatim coordinates
  if (scene.curve !== null) {
    ctx.strokeStyle = '#0057b7'
    ctx.lineWidth = 2.5
    ctx.beginPath()
    scene.curve.samples.forEach((sample, i) => {
      const [x, y] = sample.p
      if (x === undefined || y === undefined) return
      if (i === 0) ctx.moveTo(x, y)
      else ctx.lineTo(x, y)
    })
    ctx.stroke()
  }

  // draggable handles
  state.controlPoints.forEach((p, i) => {
    ctx.beginPath()
    ctx.arc(p.x, p.y, HANDLE_RADIUS, 0, 2 * Math.PI)
    ctx.fillStyle = i === state.selected ? '#d62828' : '#ffffff'
    ctx.fill()
    ctx.strokeStyle = '#d62828'
    ctx.lineWidth = 2
    ctx.stroke()
  })

  if (scene.error !== null) {
    ctx.fillStyle = 'rgba(214, 40, 40, 0.92)'
    ctx.fillRect(0, 0, width, 28)
    ctx.fillStyle = '#ffffff'
    ctx.font = '13px system-ui, sans-serif'
    ctx.fillText(`service unreachable: ${scene.error}`, 8, 18)
  }
}

const PANEL_COLORS = ['#0057b7', '#d62828', '#2a9d8f', '#e9c46a', '#7b2cbf', '#f4845f']

/** Plot the blending functions over [0, 1] in their own canvas. */
export function renderBlendingPanel(
  ctx: CanvasRenderingContext2D,
  width: number,
  height: number,
  basis: { xs: number[]; profiles: number[][] } | null,
): void {
  ctx.clearRect(0, 0, width, height)
  ctx.strokeStyle = '#dddddd'
  ctx.strokeRect(0.5, 0.5, width - 1, height - 1)
  if (basis === null || basis.xs.length === 0) return

  const first = basis.profiles[0]
  if (first === undefined) return
  const basisCount = first.length
  const pad = 6
  const toScreenX = (x: number) => pad + x * (width - 2 * pad)
  const toScreenY = (g: number) => height - pad - g * (height - 2 * pad)

  for (let j = 0; j < basisCount; j++) {
    ctx.strokeStyle = PANEL_COLORS[j % PANEL_COLORS.length] ?? '#000000'
    ctx.lineWidth = 1.5
    ctx.beginPath()
    basis.xs.forEach((x, i) => {
      const value = basis.profiles[i]?.[j] ?? 0
      const sx = toScreenX(x)
      const sy = toScreenY(value)
      if (i === 0) ctx.moveTo(sx, sy)
      else ctx.lineTo(sx, sy)
    })
    ctx.stroke()
  }
}
