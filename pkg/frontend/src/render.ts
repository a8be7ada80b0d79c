// SVG rendering of the view model (browser only).

import { Layout } from "./layout.js";
import { ViewModel } from "./viewmodel.js";

const COLORS: Record<string, string> = {
  good: "#2f9e44",
  bad: "#e03131",
  unknown: "#868e96",
};

export function drawGraph(
  svg: SVGSVGElement,
  vm: ViewModel,
  layout: Layout,
  onVertexClick: (v: number) => void,
): void {
  layout.relax(vm.vertices.length, vm.arrows);
  svg.innerHTML =
    '<defs><marker id="arrowhead" markerWidth="8" markerHeight="8" ' +
    'refX="7" refY="3" orient="auto">' +
    '<path d="M0,0 L7,3 L0,6 z" fill="#495057"/></marker></defs>';
  const ns = "http://www.w3.org/2000/svg";
  for (const [a, b] of vm.arrows) {
    const pa = layout.position(a);
    const pb = layout.position(b);
    const dx = pb.x - pa.x;
    const dy = pb.y - pa.y;
    const d = Math.max(1, Math.hypot(dx, dy));
    const trim = 18;
    const line = document.createElementNS(ns, "line");
    line.setAttribute("x1", String(pa.x + (dx / d) * trim));
    line.setAttribute("y1", String(pa.y + (dy / d) * trim));
    line.setAttribute("x2", String(pb.x - (dx / d) * trim));
    line.setAttribute("y2", String(pb.y - (dy / d) * trim));
    line.setAttribute("stroke", "#495057");
    line.setAttribute("stroke-width", "1.6");
    line.setAttribute("marker-end", "url(#arrowhead)");
    svg.appendChild(line);
  }
  for (const v of vm.vertices) {
    const p = layout.position(v.id);
    const g = document.createElementNS(ns, "g");
    g.setAttribute("class", "vertex");
    g.addEventListener("click", () => onVertexClick(v.id));
    const circle = document.createElementNS(ns, "circle");
    circle.setAttribute("cx", String(p.x));
    circle.setAttribute("cy", String(p.y));
    circle.setAttribute("r", "14");
    circle.setAttribute("fill", COLORS[v.verdict]);
    const title = document.createElementNS(ns, "title");
    title.textContent =
      `vertex ${v.id}: ${v.verdict} (before: ${v.before}, after: ${v.after})`;
    circle.appendChild(title);
    const label = document.createElementNS(ns, "text");
    label.setAttribute("x", String(p.x));
    label.setAttribute("y", String(p.y + 4));
    label.setAttribute("text-anchor", "middle");
    label.setAttribute("fill", "#fff");
    label.textContent = String(v.id);
    g.appendChild(circle);
    g.appendChild(label);
    svg.appendChild(g);
  }
}

export function drawPanel(root: HTMLElement, vm: ViewModel): void {
  const rows: [string, string][] = [
    ["form", vm.panel.form],
    ["det C", vm.panel.det === null ? "" : String(vm.panel.det)],
    ["associated polynomial", vm.panel.associated],
    ["good-mutation standard form", vm.panel.goodStd],
    ["derived standard form", vm.panel.derivedStd],
    ["history", `${vm.historyLength} mutation(s)`],
  ];
  root.innerHTML = rows
    .map(
      ([k, v]) =>
        `<div class="row"><span class="key">${k}</span>` +
        `<span class="value">${v}</span></div>`,
    )
    .join("");
}
