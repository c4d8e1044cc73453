import type {
  CircleSpec,
  Feature,
  GeometryRecord,
  VerifyReport,
} from "./model.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    detail: string,
  ) {
    super(detail);
  }
}

async function parseError(resp: Response): Promise<never> {
  let detail = resp.statusText;
  try {
    const body = await resp.json();
    if (body && typeof body.detail === "string") detail = body.detail;
  } catch {
    // non-JSON error body; keep the status text
  }
  throw new ApiError(resp.status, detail);
}

export class ApiClient {
  constructor(
    private readonly base: string = "",
    private readonly fetchFn: typeof fetch = fetch,
  ) {}

  private async getJson<T>(path: string): Promise<T> {
    const resp = await this.fetchFn(this.base + path);
    if (!resp.ok) await parseError(resp);
    return (await resp.json()) as T;
  }

  private async postJson<T>(path: string, body: unknown): Promise<T> {
    const resp = await this.fetchFn(this.base + path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!resp.ok) await parseError(resp);
    return (await resp.json()) as T;
  }

  async listGeometries(params: Record<string, string | number>): Promise<GeometryRecord[]> {
    const query = new URLSearchParams(
      Object.entries(params).map(([k, v]) => [k, String(v)]),
    );
    const body = await this.getJson<{ geometries: GeometryRecord[] }>(
      `/api/geometries?${query}`,
    );
    return body.geometries;
  }

  async getGeometry(id: string): Promise<GeometryRecord> {
    return this.getJson<GeometryRecord>(`/api/geometries/${id}`);
  }

  async verify(geometryId: string, circles: CircleSpec[]): Promise<VerifyReport> {
    return this.postJson<VerifyReport>("/api/verify", {
      geometry_id: geometryId,
      circles,
    });
  }

  async hull(circles: CircleSpec[], subset: string): Promise<Feature[]> {
    const body = await this.postJson<{ features: Feature[] }>("/api/hull", {
      circles,
      subset,
    });
    return body.features;
  }

  /** TikZ text exactly as the service produced it (no client-side rewriting). */
  async tikz(circles: CircleSpec[], width: number): Promise<string> {
    const resp = await this.fetchFn(this.base + "/api/tikz", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ circles, width }),
    });
    if (!resp.ok) await parseError(resp);
    return resp.text();
  }
}
