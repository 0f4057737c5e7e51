import init, { lattice_report, product, fixture_names, classify, theta } from "./pkg/meroforms_web.js";

const DS = [4, 7, 8, 11, 15, 19, 20, 24];
const $ = (id) => document.getElementById(id);

function fill(select, values) {
  for (const v of values) {
    const o = document.createElement("option");
    o.value = o.textContent = v;
    select.appendChild(o);
  }
}

function show(id, f) {
  const out = $(id);
  try {
    out.textContent = f();
    out.className = "";
  } catch (e) {
    out.textContent = String(e);
    out.className = "err";
  }
}

await init();
fill($("lat-d"), DS);
fill($("th-d"), DS);
fill($("prod-name"), fixture_names().split("\n"));

$("lat-go").onclick = () => show("lat-out", () => lattice_report(Number($("lat-d").value)));
$("prod-go").onclick = () => show("prod-out", () => product($("prod-name").value));
$("cls-go").onclick = () => show("cls-out", () => classify($("cls-d").value));
$("th-go").onclick = () =>
  show("th-out", () => theta(Number($("th-d").value), $("th-serre").checked, $("th-prec").value));
