/** Explorer wiring: slider, protocol checkboxes, views, URL state. */

import { ApiClient, LatestOnly, debounce, type ParetoResponse } from "./api.js";
import { renderEmptyState, renderTable, type SortSpec,
         type ColumnKey } from "./table.js";
import { ALL_PROTOCOLS, MAX_SELECTED, boundDecimal, boundLabel,
         deserialize, serialize, toggleProtocol, toggleSelected,
         type QueryState } from "./state.js";

const QUERY_DEBOUNCE_MS = 150;

export class ExplorerApp {
  private state: QueryState;
  private sort: SortSpec = { key: "id", ascending: true };
  private lastResponse: ParetoResponse | null = null;
  private latest = new LatestOnly<ParetoResponse>();
  private latestSvg = new LatestOnly<string>();
  private requery: () => void;

  constructor(private root: HTMLElement, private api: ApiClient,
              initialQuery: string) {
    this.state = deserialize(initialQuery);
    this.requery = debounce(() => void this.refreshData(), QUERY_DEBOUNCE_MS);
  }

  start(): void {
    this.renderShell();
    void this.refreshData();
  }

  private setState(next: QueryState): void {
    this.state = next;
    history.replaceState(null, "", `?${serialize(next)}`);
    this.renderControls();
    this.requery();
  }

  private async refreshData(): Promise<void> {
    const banner = this.root.querySelector("#banner") as HTMLElement;
    try {
      if (this.state.view === "spider" && this.state.selected.length > 0) {
        const svg = await this.latestSvg.run(
          () => this.api.spiderSvg(this.state.selected));
        if (svg !== undefined) this.renderSpider(svg);
      }
      const resp = await this.latest.run(
        () => this.api.pareto(this.state.yExp, this.state.protocols));
      if (resp === undefined) return;  // superseded by a newer query
      this.lastResponse = resp;
      banner.hidden = true;
      this.renderView();
    } catch (err) {
      banner.hidden = false;
      banner.textContent =
        `service unreachable (${String(err)}) — `;
      const retry = document.createElement("a");
      retry.href = "#";
      retry.textContent = "retry";
      retry.onclick = (e) => { e.preventDefault(); void this.refreshData(); };
      banner.appendChild(retry);
    }
  }

  private renderShell(): void {
    this.root.innerHTML = `
      <header>
        <h1>Distance-bounding protocol explorer</h1>
        <div id="banner" class="banner" hidden></div>
        <div id="controls"></div>
      </header>
      <main id="view"></main>`;
    this.renderControls();
  }

  private renderControls(): void {
    const el = this.root.querySelector("#controls") as HTMLElement;
    const s = this.state;
    const checkboxes = ALL_PROTOCOLS.map((p) => {
      const on = s.protocols.includes(p) ? " checked" : "";
      return `<label class="proto"><input type="checkbox" ` +
        `data-protocol="${p}"${on}> ${p}</label>`;
    }).join("");
    const views = (["table", "spider", "curves"] as const).map((v) => {
      const on = s.view === v ? " checked" : "";
      return `<label><input type="radio" name="view" value="${v}"${on}> ` +
        `${v}</label>`;
    }).join(" ");
    el.innerHTML = `
      <div class="bound">
        <label>mafia-fraud bound:
          <input type="range" id="yslider" min="-128" max="0" step="1"
                 value="${s.yExp}">
        </label>
        <span id="ylabel">${boundLabel(s.yExp)} = ${boundDecimal(s.yExp)}</span>
      </div>
      <div class="protocols">${checkboxes}</div>
      <div class="views">${views}
        <span class="selection">${s.selected.length}/${MAX_SELECTED} selected
        </span></div>`;
    const slider = el.querySelector("#yslider") as HTMLInputElement;
    slider.oninput = () => {
      const yExp = Number(slider.value);
      (el.querySelector("#ylabel") as HTMLElement).textContent =
        `${boundLabel(yExp)} = ${boundDecimal(yExp)}`;
      this.setState({ ...this.state, yExp });
    };
    el.querySelectorAll("input[data-protocol]").forEach((node) => {
      const box = node as HTMLInputElement;
      box.onchange = () =>
        this.setState(toggleProtocol(this.state, box.dataset.protocol!));
    });
    el.querySelectorAll("input[name=view]").forEach((node) => {
      const radio = node as HTMLInputElement;
      radio.onchange = () => {
        if (radio.checked) {
          this.setState({ ...this.state,
                          view: radio.value as QueryState["view"] });
        }
      };
    });
  }

  private renderView(): void {
    if (this.state.view === "table") this.renderTableView();
    else if (this.state.view === "spider") void this.refreshSpider();
    else this.renderCurvesView();
  }

  private renderTableView(): void {
    const el = this.root.querySelector("#view") as HTMLElement;
    const resp = this.lastResponse;
    if (!resp || resp.rows.length === 0) {
      el.innerHTML = renderEmptyState(this.state.protocols.length);
      return;
    }
    el.innerHTML = renderTable(resp.rows, this.sort, this.state.selected);
    el.querySelectorAll("th[data-key]").forEach((node) => {
      const th = node as HTMLElement;
      th.onclick = () => {
        const key = th.dataset.key as ColumnKey;
        this.sort = this.sort.key === key
          ? { key, ascending: !this.sort.ascending }
          : { key, ascending: true };
        this.renderTableView();
      };
    });
    el.querySelectorAll("input[data-id]").forEach((node) => {
      const box = node as HTMLInputElement;
      box.onchange = () => {
        const next = toggleSelected(this.state, box.dataset.id!);
        if (next.selected === this.state.selected) box.checked = false;
        this.setState(next);
      };
    });
  }

  private async refreshSpider(): Promise<void> {
    const el = this.root.querySelector("#view") as HTMLElement;
    if (this.state.selected.length === 0) {
      el.innerHTML = `<p class="empty">Select up to ${MAX_SELECTED} ` +
        `instances in the table view to compare them here.</p>`;
      return;
    }
    const svg = await this.latestSvg.run(
      () => this.api.spiderSvg(this.state.selected));
    if (svg !== undefined) this.renderSpider(svg);
  }

  private renderSpider(svg: string): void {
    const el = this.root.querySelector("#view") as HTMLElement;
    el.innerHTML = `<div class="spider">${svg}</div>`;
  }

  private renderCurvesView(): void {
    const el = this.root.querySelector("#view") as HTMLElement;
    el.innerHTML = `
      <div class="curves">
        <img src="/static/curves-mafia.svg" alt="mafia resistance curves">
        <p>Per-protocol best resistance against round count; regenerate via
        the command line for other fraud kinds.</p>
      </div>`;
  }
}

export function mount(): void {
  const root = document.getElementById("app");
  if (!root) throw new Error("missing #app element");
  const app = new ExplorerApp(root, new ApiClient(""),
                              location.search.replace(/^\?/, ""));
  app.start();
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  mount();
}
