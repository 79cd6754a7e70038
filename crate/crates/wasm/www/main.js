import init, { solve, random_graph, reduce } from "./pkg/fpfaut_wasm.js";

const $ = (id) => document.getElementById(id);
const SVG = "http://www.w3.org/2000/svg";
const TAG_COLORS = {
  edgeless: "#4e79a7", complete: "#f28e2b", tree: "#59a14f", "co-tree": "#76b7b2",
  spider: "#e15759", "small-prime": "#b07aa1", unsupported: "#999999",
};

function el(name, attrs, parent) {
  const e = document.createElementNS(SVG, name);
  for (const [k, v] of Object.entries(attrs)) e.setAttribute(k, v);
  parent.appendChild(e);
  return e;
}

function status(text, cls = "") {
  $("status").textContent = text;
  $("status").className = cls;
}

// Leaves in tree order, so every module is a contiguous arc of the circle.
function leafOrder(node, out = []) {
  if (node.children.length === 0) out.push(node.vertices[0]);
  for (const c of node.children) leafOrder(c, out);
  return out;
}

function modules(node, depth = 0, out = []) {
  if (node.children.length > 0) out.push({ node, depth });
  for (const c of node.children) modules(c, depth + 1, out);
  return out;
}

function treeText(node, indent = "") {
  const what = node.children.length === 0 ? `v${node.vertices[0]}` : `${node.kind}/${node.tag} {${node.vertices.join(" ")}}`;
  const mark = node.decision === null ? "" : node.decision ? " +" : " -";
  return indent + what + mark + "\n" + node.children.map((c) => treeText(c, indent + "  ")).join("");
}

function arc(cx, cy, r, a0, a1) {
  const p = (a) => [cx + r * Math.cos(a), cy + r * Math.sin(a)];
  const [x0, y0] = p(a0);
  const [x1, y1] = p(a1);
  const large = a1 - a0 > Math.PI ? 1 : 0;
  return `M ${x0} ${y0} A ${r} ${r} 0 ${large} 1 ${x1} ${y1}`;
}

function draw(result) {
  const svg = $("canvas");
  svg.innerHTML = "";
  const { width, height } = svg.getBoundingClientRect();
  const n = result.n;
  const cx = width / 2, cy = height / 2;
  const mods = modules(result.tree);
  const maxDepth = mods.reduce((m, x) => Math.max(m, x.depth), 0);
  const ring = Math.min(10, 60 / (maxDepth + 1));
  const R = Math.max(40, Math.min(width, height) / 2 - 30 - ring * (maxDepth + 1));
  const order = leafOrder(result.tree);
  const slot = new Array(n);
  order.forEach((v, i) => (slot[v] = i));
  const step = (2 * Math.PI) / n;
  const angle = (v) => slot[v] * step - Math.PI / 2;
  const pos = (v) => [cx + R * Math.cos(angle(v)), cy + R * Math.sin(angle(v))];

  const defs = el("defs", {}, svg);
  const marker = el("marker", { id: "head", viewBox: "0 0 10 10", refX: 10, refY: 5, markerWidth: 6, markerHeight: 6, orient: "auto-start-reverse" }, defs);
  el("path", { d: "M 0 0 L 10 5 L 0 10 z", fill: "#c0392b" }, marker);

  // Module hulls: one arc band per module, deeper modules further out.
  for (const { node, depth } of mods) {
    const slots = node.vertices.map((v) => slot[v]);
    const lo = Math.min(...slots), hi = Math.max(...slots);
    if (node.vertices.length === n && depth === 0 && n > 1) {
      el("circle", { cx, cy, r: R + ring * 0.6, fill: "none", stroke: TAG_COLORS[node.tag] || "#999", "stroke-width": ring * 0.6, opacity: 0.35 }, svg);
      continue;
    }
    const a0 = (lo - 0.4) * step - Math.PI / 2, a1 = (hi + 0.4) * step - Math.PI / 2;
    const path = el("path", {
      d: arc(cx, cy, R + ring * (depth + 0.6), a0, a1), fill: "none",
      stroke: TAG_COLORS[node.tag] || "#999", "stroke-width": ring * 0.6, opacity: 0.55, "stroke-linecap": "round",
    }, svg);
    el("title", {}, path).textContent = `${node.kind} / ${node.tag}: {${node.vertices.join(" ")}}`;
  }

  for (const [a, b] of result.edges) {
    const [x0, y0] = pos(a), [x1, y1] = pos(b);
    el("line", { x1: x0, y1: y0, x2: x1, y2: y1, stroke: "#888", "stroke-width": 1 }, svg);
  }

  // Witness: curved arrows v -> w(v); 2-cycles drawn once, headed at both ends.
  if (result.witness) {
    result.witness.forEach((w, v) => {
      if (w === v || (result.witness[w] === v && w < v)) return;
      const [x0, y0] = pos(v), [x1, y1] = pos(w);
      const mx = (x0 + x1) / 2, my = (y0 + y1) / 2;
      const bend = 0.25;
      const qx = mx + (cx - mx) * bend, qy = my + (cy - my) * bend;
      const both = result.witness[w] === v;
      el("path", {
        d: `M ${x0} ${y0} Q ${qx} ${qy} ${x1} ${y1}`, fill: "none", stroke: "#c0392b", "stroke-width": 1.6,
        "marker-end": "url(#head)", ...(both ? { "marker-start": "url(#head)" } : {}),
      }, svg);
    });
  }

  const r = Math.max(3, Math.min(12, 300 / n));
  for (let v = 0; v < n; v++) {
    const [x, y] = pos(v);
    el("circle", { cx: x, cy: y, r, fill: "#fff", stroke: "#333", "stroke-width": 1.2 }, svg);
    if (n <= 60) {
      const t = el("text", { x, y: y + 4, "text-anchor": "middle", "font-size": Math.min(11, r + 2) }, svg);
      t.textContent = v;
    }
  }
}

let last = null;

function run() {
  try {
    const result = JSON.parse(solve($("graph").value, $("mode").value, Number($("cap").value)));
    last = result;
    draw(result);
    $("tree").textContent = treeText(result.tree);
    const what = result.mode === "aut" ? "automorphism" : "involution";
    status(
      result.decision
        ? `fixed-point-free ${what}: ${result.witness_cycles}`
        : `no fixed-point-free ${what}`,
      result.decision ? "yes" : "no",
    );
  } catch (e) {
    status(String(e.message || e), "no");
  }
}

function guarded(f) {
  return () => {
    try {
      f();
      run();
    } catch (e) {
      status(String(e.message || e), "no");
    }
  };
}

await init();
$("legend").innerHTML = Object.entries(TAG_COLORS).map(([t, c]) => `<span style="background:${c}"></span>${t} `).join(" ");
$("solve").onclick = run;
$("random").onclick = guarded(() => {
  $("graph").value = random_graph($("class").value, Number($("n").value), Number($("seed").value));
});
$("reduce").onclick = guarded(() => {
  $("graph").value = reduce($("graph").value, $("construction").value, Number($("k").value));
});
window.addEventListener("resize", () => last && draw(last));
run();
