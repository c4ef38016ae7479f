/* tslint:disable */
/* eslint-disable */

/**
 * Minimal resolution with its Betti table.
 */
export function betti(ring: string, module: string, steps: number): string;

/**
 * The module cut out by `eta`, with its variety.
 */
export function cut(ring: string, module: string, eta: string): string;

/**
 * Indecomposable summands.
 */
export function decompose(ring: string, module: string): string;

/**
 * Support variety report.
 */
export function variety(ring: string, module: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly betti: (a: number, b: number, c: number, d: number, e: number) => [number, number];
    readonly cut: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number];
    readonly decompose: (a: number, b: number, c: number, d: number) => [number, number];
    readonly variety: (a: number, b: number, c: number, d: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
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
