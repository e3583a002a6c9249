import init, { construct, bounds, verify } from "./pkg/biclique_cover_web.js";

const $ = (id) => document.getElementById(id);

function optionalInt(el) {
  return el.value === "" ? undefined : Number(el.value);
}

function showError(target, err) {
  target.innerHTML = "";
  const p = document.createElement("p");
  p.className = "error";
  p.textContent = String(err);
  target.appendChild(p);
}

function summary(r) {
  const lines = [
    `bicliques c = ${r.c}, max component = ${r.max_component}`,
    r.complete ? "complete: yes" : `complete: no, pair {${r.uncovered[0]},${r.uncovered[1]}} is uncovered`,
    `size sum = ${r.size_sum} against n·log2 n ≈ ${r.threshold.toFixed(4)}` +
      (r.size_bound_tight ? " (tight)" : ""),
    `Σ 2^s_v = ${r.copies_sum} against 2^c = ${r.holes}`,
  ];
  if (r.within_bound !== null) lines.push(`within bound: ${r.within_bound ? "yes" : "no"}`);
  const pre = document.createElement("pre");
  pre.textContent = lines.join("\n");
  return pre;
}

function matrixTable(rows) {
  const table = document.createElement("table");
  table.className = "matrix";
  rows.forEach((row, v) => {
    const tr = table.insertRow();
    const head = tr.insertCell();
    head.textContent = v;
    for (const ch of row) {
      const td = tr.insertCell();
      td.textContent = ch;
      td.className = ch === "0" ? "s0" : ch === "1" ? "s1" : "sx";
    }
  });
  return table;
}

function render(target, json) {
  const r = JSON.parse(json);
  target.innerHTML = "";
  target.appendChild(summary(r));
  target.appendChild(matrixTable(r.matrix));
  return r;
}

function onConstruct() {
  const out = $("c-out");
  try {
    const r = render(out, construct(Number($("c-n").value), optionalInt($("c-x")), $("c-method").value));
    $("v-text").value = r.covering;
  } catch (e) {
    showError(out, e);
  }
}

function onBounds() {
  try {
    const r = JSON.parse(bounds(Number($("b-n").value), Number($("b-x").value)));
    $("b-out").textContent = Object.entries(r).map(([k, v]) => `${k}: ${v}`).join("\n");
  } catch (e) {
    $("b-out").textContent = String(e);
  }
}

function onVerify() {
  const out = $("v-out");
  try {
    render(out, verify($("v-text").value, optionalInt($("v-x"))));
  } catch (e) {
    showError(out, e);
  }
}

await init();
$("c-go").addEventListener("click", onConstruct);
$("b-go").addEventListener("click", onBounds);
$("v-go").addEventListener("click", onVerify);
onConstruct();
