/**
 * Service client: the only place the designer touches numbers.
 *
 * Every value drawn on screen originates from one of these calls; the UI
 * itself does nothing beyond linear screen transforms.  Curve refetches are
 * debounced (75 ms) and tagged with a request id; a response is applied
 * only if it matches the newest request, and the previous in-flight request
 * is aborted on supersession, so at most one request is ever outstanding.
 */

import type { CurveResponse, Point, UnifiedResponse } from './types.js'

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>

export class ServiceError extends Error {}

export class ServiceClient {
  constructor(
    readonly baseUrl: string,
    private readonly fetchFn: FetchLike = (...args) => fetch(...args),
  ) {}

  private async getJson<T>(path: string, signal?: AbortSignal): Promise<T> {
    const response = await this.fetchFn(`${this.baseUrl}${path}`, { signal })
    if (!response.ok) throw new ServiceError(`GET ${path}: HTTP ${response.status}`)
    return (await response.json()) as T
  }

  async curve(points: readonly Point[], samples: number, signal?: AbortSignal): Promise<CurveResponse> {
    const body = JSON.stringify({
      control_points: points.map((p) => [p.x, p.y]),
      samples,
    })
    const response = await this.fetchFn(`${this.baseUrl}/curve`, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body,
      signal,
    })
    if (!response.ok) throw new ServiceError(`POST /curve: HTTP ${response.status}`)
    return (await response.json()) as CurveResponse
  }

  /** Blending-function values g(n, j, x) for each x, one GET per sample. */
  async basisProfiles(n: number, xs: readonly number[]): Promise<number[][]> {
    return Promise.all(xs.map((x) => this.getJson<number[]>(`/basis?n=${n}&x=${x}`)))
  }

  async unified(n: number, b: number, s: number, x: string): Promise<UnifiedResponse> {
    const query = `n=${n}&b=${b}&s=${s}&x=${encodeURIComponent(x)}`
    return this.getJson<UnifiedResponse>(`/unified?${query}`)
  }
}

export interface CurveFetcherCallbacks {
  onCurve(curve: CurveResponse): void
  onError(message: string): void
}

export const DEBOUNCE_MS = 75

/**
 * Debounced, cancelling fetch pipeline for /curve.
 *
 * `schedule` may be called on every pointermove; it restarts the 75 ms
 * timer.  When the timer fires, any in-flight request is aborted and a new
 * one is issued with a fresh id; stale responses (id mismatch) are dropped.
 */
export class DebouncedCurveFetcher {
  private timer: ReturnType<typeof setTimeout> | null = null
  private pending: { points: Point[]; samples: number } | null = null
  private controller: AbortController | null = null
  private latestRequestId = 0

  constructor(
    private readonly client: ServiceClient,
    private readonly callbacks: CurveFetcherCallbacks,
    private readonly debounceMs: number = DEBOUNCE_MS,
  ) {}

  get inFlight(): boolean {
    return this.controller !== null
  }

  schedule(points: readonly Point[], samples: number): void {
    this.pending = { points: points.map((p) => ({ ...p })), samples }
    if (this.timer !== null) clearTimeout(this.timer)
    this.timer = setTimeout(() => this.fire(), this.debounceMs)
  }

  /** Issue the pending request immediately (e.g. on pointerup). */
  flush(): void {
    if (this.timer !== null) {
      clearTimeout(this.timer)
      this.timer = null
    }
    if (this.pending !== null) this.fire()
  }

  private fire(): void {
    this.timer = null
    const request = this.pending
    if (request === null) return
    this.pending = null

    this.controller?.abort()
    const controller = new AbortController()
    this.controller = controller
    const id = ++this.latestRequestId

    this.client
      .curve(request.points, request.samples, controller.signal)
      .then((curve) => {
        if (id !== this.latestRequestId) return // superseded
        this.controller = null
        this.callbacks.onCurve(curve)
      })
      .catch((error: unknown) => {
        if (id !== this.latestRequestId) return
        this.controller = null
        if (error instanceof DOMException && error.name === 'AbortError') return
        this.callbacks.onError(error instanceof Error ? error.message : String(error))
      })
  }
}
