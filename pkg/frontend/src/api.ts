/**
 * Typed client for the comparison service.  The UI performs no domain
 * computation: every number it shows comes from these endpoints.
 */

export interface ScaledRow {
  id: string;
  n: number;
  p_m: string;
  p_d: string;
  p_t: string;
  b: boolean;
  c: number;
  m_kb: number;
  f: boolean;
  total: number;
}

export interface ParetoResponse {
  y: string;
  rows: ScaledRow[];
  totals: Record<string, number>;
  member_ids: string[];
}

export interface ProtocolInfo {
  id: string;
  params: string[];
  grid_size: number;
  provenance: Record<string, string>;
  notes: string;
}

export class ApiClient {
  constructor(private base: string = "") {}

  async protocols(): Promise<ProtocolInfo[]> {
    const resp = await fetch(`${this.base}/api/protocols`);
    if (!resp.ok) throw new Error(`protocols: HTTP ${resp.status}`);
    const doc = await resp.json();
    return doc.protocols as ProtocolInfo[];
  }

  async pareto(yExp: number, protocols: string[]): Promise<ParetoResponse> {
    const body = {
      y: yExp === 0 ? "1" : `2^${yExp}`,
      protocols,
    };
    const resp = await fetch(`${this.base}/api/pareto`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!resp.ok) throw new Error(`pareto: HTTP ${resp.status}`);
    return (await resp.json()) as ParetoResponse;
  }

  async spiderSvg(instanceIds: string[],
                  normalization?: string): Promise<string> {
    const body: Record<string, unknown> = { instance_ids: instanceIds };
    if (normalization) body.normalization = normalization;
    const resp = await fetch(`${this.base}/api/chart/spider`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!resp.ok) throw new Error(`spider: HTTP ${resp.status}`);
    return await resp.text();
  }
}

/**
 * Wraps an async producer so that only the latest request's result is
 * delivered; responses arriving out of order are discarded.
 */
export class LatestOnly<T> {
  private ticket = 0;

  async run(producer: () => Promise<T>): Promise<T | undefined> {
    const mine = ++this.ticket;
    const value = await producer();
    return mine === this.ticket ? value : undefined;
  }
}

export function debounce<A extends unknown[]>(
  fn: (...args: A) => void, waitMs: number): (...args: A) => void {
  let timer: ReturnType<typeof setTimeout> | undefined;
  return (...args: A) => {
    if (timer !== undefined) clearTimeout(timer);
    timer = setTimeout(() => fn(...args), waitMs);
  };
}
