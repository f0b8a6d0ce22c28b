/* tslint:disable */
/* eslint-disable */

/**
 * Deflected shape `[x0, w0, x1, w1, ...]` [m] of the same beam at `time` [s].
 */
export function deflected_shape(q: number, temperature: number, kin: string, n_el: number, time: number): Float64Array;

/**
 * Midspan deflection [m] of the clamped 3 m demo beam under a load `q` [N/m]
 * applied at t = 0 and held until 1e5 s: `[t0, w0, t1, w1, ...]`.
 */
export function deflection_history(q: number, temperature: number, kin: string, n_el: number): Float64Array;

/**
 * PVB shear relaxation modulus [Pa] at `temperature` [°C], sampled log-uniformly
 * in true time between 1e-6 s and 1e8 s: `[t0, G0, t1, G1, ...]`.
 */
export function relaxation_curve(temperature: number, n_points: number): Float64Array;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly deflected_shape: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
    readonly deflection_history: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
    readonly relaxation_curve: (a: number, b: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
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
