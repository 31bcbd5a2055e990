import init, { bernoulli_table, bernoulli_curve, hoggatt_triangle } from "./pkg/sdcalc_web.js";

const $ = (id) => document.getElementById(id);
const int = (id) => parseInt($(id).value, 10);

function showError(el, err) {
  el.innerHTML = "";
  const p = document.createElement("p");
  p.className = "error";
  p.textContent = err instanceof Error ? err.message : String(err);
  el.appendChild(p);
}

function renderTable() {
  const out = $("t-out");
  try {
    const rows = JSON.parse(bernoulli_table(int("t-d"), int("t-m"), int("t-n"), int("t-digits")));
    const table = document.createElement("table");
    table.innerHTML = "<tr><th>n</th><th>exact</th><th>decimal</th></tr>";
    for (const r of rows) {
      const tr = table.insertRow();
      for (const v of [r.n, r.value, r.decimal]) tr.insertCell().textContent = v;
    }
    out.replaceChildren(table);
  } catch (e) {
    showError(out, e);
  }
}

function renderCurve() {
  const canvas = $("c-plot");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  let curve;
  try {
    const x0 = parseFloat($("c-x0").value);
    const x1 = parseFloat($("c-x1").value);
    curve = JSON.parse(bernoulli_curve(int("c-d"), int("c-m"), int("c-n"), x0, x1, 400));
  } catch (e) {
    $("c-poly").textContent = e instanceof Error ? e.message : String(e);
    return;
  }
  $("c-poly").textContent = `B(x) = ${curve.polynomial}`;

  const { xs, ys } = curve;
  let lo = Math.min(...ys), hi = Math.max(...ys);
  if (hi - lo < 1e-9) { lo -= 1; hi += 1; }
  const pad = 20;
  const sx = (x) => pad + ((x - xs[0]) / (xs[xs.length - 1] - xs[0])) * (canvas.width - 2 * pad);
  const sy = (y) => canvas.height - pad - ((y - lo) / (hi - lo)) * (canvas.height - 2 * pad);

  ctx.strokeStyle = "#bbb";
  ctx.beginPath();
  if (lo <= 0 && hi >= 0) { ctx.moveTo(pad, sy(0)); ctx.lineTo(canvas.width - pad, sy(0)); }
  if (xs[0] <= 0 && xs[xs.length - 1] >= 0) { ctx.moveTo(sx(0), pad); ctx.lineTo(sx(0), canvas.height - pad); }
  ctx.stroke();

  ctx.strokeStyle = "#1f5fbf";
  ctx.lineWidth = 2;
  ctx.beginPath();
  xs.forEach((x, i) => (i ? ctx.lineTo(sx(x), sy(ys[i])) : ctx.moveTo(sx(x), sy(ys[i]))));
  ctx.stroke();

  ctx.fillStyle = "#555";
  ctx.font = "12px sans-serif";
  ctx.fillText(hi.toPrecision(4), 2, pad - 6);
  ctx.fillText(lo.toPrecision(4), 2, canvas.height - 4);
}

function renderTriangle() {
  const out = $("h-out");
  try {
    const rows = JSON.parse(hoggatt_triangle(int("h-d"), int("h-rows")));
    out.textContent = rows.map((r) => r.join("  ")).join("\n");
  } catch (e) {
    showError(out, e);
  }
}

await init();
for (const [prefix, render] of [["t-", renderTable], ["c-", renderCurve], ["h-", renderTriangle]]) {
  document.querySelectorAll(`input[id^="${prefix}"]`).forEach((el) => el.addEventListener("input", render));
  render();
}
