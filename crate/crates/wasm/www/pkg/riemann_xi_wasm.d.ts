/* tslint:disable */
/* eslint-disable */

/**
 * Interleaved `[t0, ξ(1/2 + it0), t1, …]` on an even grid. Points where
 * the series fails come back as NaN.
 */
export function criticalCurve(t_from: number, t_to: number, samples: number): Float64Array;

/**
 * `[re, im, terms_used, remainder_bound]` of Γ(β + 1 + ik, α).
 */
export function upperGamma(beta: number, k: number, alpha: number): Float64Array;

/**
 * `[re, im, error_estimate, n_used]` of ξ(σ + it).
 */
export function xiAt(sigma: number, t: number, method: string): Float64Array;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly criticalCurve: (a: number, b: number, c: number) => [number, number, number, number];
    readonly upperGamma: (a: number, b: number, c: number) => [number, number, number, number];
    readonly xiAt: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
