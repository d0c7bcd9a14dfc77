// Plain-JS front end; all computation happens in the wasm module.

const SVG_NS = "http://www.w3.org/2000/svg";
const ORIGINAL = "#2563eb";
const SUBDIV = "#d97706";

let wasm = null;

function el(tag, attrs = {}, text) {
  const node = document.createElement(tag);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  if (text !== undefined) node.textContent = text;
  return node;
}

function svgEl(tag, attrs = {}) {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  return node;
}

function call(name, ...args) {
  const out = JSON.parse(wasm[name](...args));
  if (out.error) throw new Error(out.error);
  return out;
}

// ---- interval track rendering -------------------------------------------

// Pack intervals into horizontal lanes so disjoint ones share a line.
function packLanes(intervals) {
  const order = intervals.map((iv, v) => ({ v, l: iv[0], r: iv[1] }));
  order.sort((a, b) => a.l - b.l || a.r - b.r || a.v - b.v);
  const laneEnd = [];
  const laneOf = new Array(intervals.length);
  for (const item of order) {
    let lane = laneEnd.findIndex((end) => end < item.l);
    if (lane === -1) {
      lane = laneEnd.length;
      laneEnd.push(item.r);
    } else {
      laneEnd[lane] = item.r;
    }
    laneOf[item.v] = lane;
  }
  return { laneOf, lanes: laneEnd.length };
}

function intervalTrack(intervals, originalCount, label) {
  const lo = Math.min(...intervals.map((iv) => iv[0]));
  const hi = Math.max(...intervals.map((iv) => iv[1]));
  const width = 520, left = 10, right = 10, rowH = 10, top = 18;
  const scale = (hi > lo) ? (width - left - right) / (hi - lo) : 1;
  const x = (t) => left + (t - lo) * scale;
  const { laneOf, lanes } = packLanes(intervals);
  const svg = svgEl("svg", {
    viewBox: `0 0 ${width} ${top + lanes * rowH + 6}`,
    width: width,
  });
  const caption = svgEl("text", { x: left, y: 12, class: "dimlabel" });
  caption.textContent = label;
  svg.appendChild(caption);
  intervals.forEach((iv, v) => {
    const y = top + laneOf[v] * rowH;
    const x1 = x(iv[0]), x2 = x(iv[1]);
    const bar = svgEl("rect", {
      x: x1 - 1.5,
      y: y,
      width: Math.max(x2 - x1 + 3, 3),
      height: rowH - 3,
      rx: 1.5,
      fill: v < originalCount ? ORIGINAL : SUBDIV,
      "fill-opacity": 0.85,
    });
    const title = svgEl("title");
    title.textContent = `vertex ${v}: [${iv[0]}, ${iv[1]}]`;
    bar.appendChild(title);
    svg.appendChild(bar);
  });
  return svg;
}

// ---- 2D box view ---------------------------------------------------------

function boxView(dimX, dimY, originalCount) {
  const size = 360, pad = 16;
  const lox = Math.min(...dimX.map((iv) => iv[0]));
  const hix = Math.max(...dimX.map((iv) => iv[1]));
  const loy = Math.min(...dimY.map((iv) => iv[0]));
  const hiy = Math.max(...dimY.map((iv) => iv[1]));
  const sx = (hix > lox) ? (size - 2 * pad) / (hix - lox) : 1;
  const sy = (hiy > loy) ? (size - 2 * pad) / (hiy - loy) : 1;
  const svg = svgEl("svg", { viewBox: `0 0 ${size} ${size}`, width: size });
  svg.appendChild(svgEl("rect", {
    x: 0.5, y: 0.5, width: size - 1, height: size - 1,
    fill: "none", stroke: "#d7dee6",
  }));
  dimX.forEach((ivx, v) => {
    const ivy = dimY[v];
    const x = pad + (ivx[0] - lox) * sx;
    const w = Math.max((ivx[1] - ivx[0]) * sx, 5);
    const y = pad + (ivy[0] - loy) * sy;
    const h = Math.max((ivy[1] - ivy[0]) * sy, 5);
    const box = svgEl("rect", {
      x: x, y: size - y - h, width: w, height: h, rx: 2,
      fill: v < originalCount ? ORIGINAL : SUBDIV,
      "fill-opacity": 0.28,
      stroke: v < originalCount ? ORIGINAL : SUBDIV,
      "stroke-width": 1,
    });
    const title = svgEl("title");
    title.textContent =
      `vertex ${v}: [${ivx[0]}, ${ivx[1]}] x [${ivy[0]}, ${ivy[1]}]`;
    box.appendChild(title);
    svg.appendChild(box);
  });
  return svg;
}

// ---- panel 1: subdivision ------------------------------------------------

function refreshSubdivision() {
  const kind = document.getElementById("sub-kind").value;
  const n = Number(document.getElementById("sub-n").value);
  const seed = Number(document.getElementById("sub-seed").value) || 0;
  document.getElementById("sub-n-label").textContent = n;
  document.getElementById("sub-seed-wrap").style.display =
    kind === "random" ? "" : "none";
  const stats = document.getElementById("sub-stats");
  const tracks = document.getElementById("sub-tracks");
  const boxes = document.getElementById("sub-boxes");
  stats.replaceChildren();
  tracks.replaceChildren();
  boxes.replaceChildren();
  let data;
  try {
    data = call("subdivision_demo", kind, n, BigInt(seed));
  } catch (e) {
    stats.appendChild(el("p", { class: "error" }, e.message));
    return;
  }
  const s1 = el("p", { class: "stat" });
  s1.innerHTML =
    `base: <b>${data.base.n}</b> vertices / <b>${data.base.edges.length}</b> edges
     &rarr; subdivided: <b>${data.subdivided.n}</b> vertices /
     <b>${data.subdivided.edges.length}</b> edges`;
  const s2 = el("p", { class: "stat" });
  const family = data.family_size === null ? "" :
    `, suitable family size ${data.family_size}`;
  const colors = data.colors_used === null ? "" :
    `, ${data.colors_used} greedy colors`;
  s2.innerHTML =
    `branch: <b>${data.branch}</b>${family}${colors},
     dimensions: <b>${data.dims.length}</b>
     <span class="badge ${data.valid ? "ok" : "bad"}">
       ${data.valid ? "verified" : "INVALID"}</span>`;
  stats.append(s1, s2);

  data.dims.forEach((iv, i) => {
    tracks.appendChild(intervalTrack(iv, data.original_count,
      `dimension ${i + 1}`));
  });

  const selX = document.getElementById("sub-dim-x");
  const selY = document.getElementById("sub-dim-y");
  const keep = [Number(selX.value), Number(selY.value)];
  selX.replaceChildren();
  selY.replaceChildren();
  data.dims.forEach((_, i) => {
    selX.appendChild(el("option", { value: i }, `dim ${i + 1}`));
    selY.appendChild(el("option", { value: i }, `dim ${i + 1}`));
  });
  selX.value = keep[0] < data.dims.length ? keep[0] : 0;
  selY.value = keep[1] < data.dims.length ? keep[1] : Math.min(1, data.dims.length - 1);
  boxes.appendChild(boxView(
    data.dims[Number(selX.value)],
    data.dims[Number(selY.value)],
    data.original_count,
  ));
}

// ---- panel 2: suitable families -------------------------------------------

function refreshSuitable() {
  const n = Number(document.getElementById("suit-n").value);
  const out = document.getElementById("suit-out");
  out.replaceChildren();
  let data;
  try {
    data = call("suitable_demo", n);
  } catch (e) {
    out.appendChild(el("p", { class: "error" }, e.message));
    return;
  }
  const head = el("p", { class: "stat" });
  head.innerHTML =
    `family size <b>${data.size}</b>, formula
     &lceil;log&#8322;log&#8322;${data.n}&rceil;+1 = <b>${data.formula_size}</b>
     <span class="badge ${data.suitable ? "ok" : "bad"}">
       ${data.suitable ? "simply 3-suitable" : "NOT suitable"}</span>`;
  out.appendChild(head);
  if (data.exact_min !== null) {
    out.appendChild(el("p", { class: "stat" },
      `exhaustive search over all families: minimum size is ${data.exact_min}`));
  }
  if (data.witness) {
    out.appendChild(el("p", { class: "error" },
      `witness: ${data.witness[0]} lies between ${data.witness[1]} and ` +
      `${data.witness[2]} in every member`));
  }
  if (data.n <= 40) {
    const table = el("table", { class: "perm-table" });
    const headRow = el("tr");
    headRow.appendChild(el("th", {}, "position"));
    for (let i = 1; i <= data.n; i++) headRow.appendChild(el("th", {}, String(i)));
    table.appendChild(headRow);
    data.perms.forEach((perm, i) => {
      const row = el("tr");
      row.appendChild(el("th", {}, `σ${i + 1}`));
      perm.forEach((img) => row.appendChild(el("td", {}, String(img))));
      table.appendChild(row);
    });
    out.appendChild(table);
  } else {
    out.appendChild(el("p", { class: "stat" },
      "(family too wide to tabulate; verification ran on all pairs)"));
  }
}

// ---- panel 3: exact boxicity ----------------------------------------------

function refreshExact() {
  const name = document.getElementById("exact-name").value;
  const out = document.getElementById("exact-out");
  out.replaceChildren();
  let data;
  try {
    data = call("exact_demo", name);
  } catch (e) {
    out.appendChild(el("p", { class: "error" }, e.message));
    return;
  }
  const head = el("p", { class: "stat" });
  head.innerHTML =
    `${data.graph.n} vertices, ${data.graph.edges.length} edges &mdash;
     exact boxicity <b>${data.boxicity}</b>
     (certified by ${data.witnesses.length} interval witness${data.witnesses.length > 1 ? "es" : ""}
     and exhausted search below)`;
  out.appendChild(head);
  const tracks = el("div", { class: "tracks" });
  data.witnesses.forEach((w, i) => {
    tracks.appendChild(intervalTrack(w.rep, data.graph.n,
      `witness ${i + 1}: interval supergraph with ${w.edges.length} edges`));
  });
  out.appendChild(tracks);
}

// ---- boot ------------------------------------------------------------------

async function boot() {
  try {
    const mod = await import("./pkg/boxrep_wasm.js");
    await mod.default();
    wasm = mod;
  } catch (e) {
    const box = document.getElementById("boot-error");
    box.style.display = "block";
    box.innerHTML =
      "Could not load the wasm module. Build it first: " +
      "<code>wasm-pack build crates/boxrep-wasm --target web --out-dir www/pkg</code> " +
      "then serve this directory. (" + e.message + ")";
    return;
  }
  const redoSub = () => refreshSubdivision();
  for (const id of ["sub-kind", "sub-n", "sub-seed", "sub-dim-x", "sub-dim-y"]) {
    document.getElementById(id).addEventListener("input", redoSub);
  }
  document.getElementById("suit-n").addEventListener("input", refreshSuitable);
  document.getElementById("exact-name").addEventListener("input", refreshExact);
  refreshSubdivision();
  refreshSuitable();
  refreshExact();
}

boot();
