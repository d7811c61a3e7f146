import init, { hitting_set, classify, ruling_set } from "./pkg/hitset_wasm.js";

const $ = (id) => document.getElementById(id);
const num = (id) => Number($(id).value);

function guarded(out, f) {
  try {
    f();
  } catch (e) {
    $(out).textContent = "error: " + (e.message ?? e);
  }
}

// Lay vertices out by depth from their root (or cycle) and draw members filled.
function draw(canvas, succ, members) {
  const ctx = canvas.getContext("2d");
  const n = succ.length;
  const depth = new Array(n).fill(-1);
  const depthOf = (x) => {
    const stack = [];
    const seen = new Set();
    while (depth[x] < 0 && succ[x] !== null && !seen.has(x)) {
      seen.add(x);
      stack.push(x);
      x = succ[x];
    }
    let d = depth[x] < 0 ? 0 : depth[x];
    if (depth[x] < 0) depth[x] = 0;
    while (stack.length) {
      const y = stack.pop();
      if (depth[y] < 0) depth[y] = ++d;
      else d = depth[y];
    }
  };
  for (let x = 0; x < n; x++) depthOf(x);
  const maxDepth = Math.max(1, ...depth);
  const perLevel = new Map();
  const pos = [];
  for (let x = 0; x < n; x++) {
    const k = perLevel.get(depth[x]) ?? 0;
    perLevel.set(depth[x], k + 1);
    pos.push([depth[x], k]);
  }
  const width = Math.max(...perLevel.values());
  const px = (x) => 20 + ((canvas.width - 40) * (maxDepth - pos[x][0])) / maxDepth;
  const py = (x) => 15 + ((canvas.height - 30) * pos[x][1]) / Math.max(1, width - 1);
  const hit = new Set(members);
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  ctx.strokeStyle = "#bbb";
  for (let x = 0; x < n; x++) {
    if (succ[x] === null) continue;
    ctx.beginPath();
    ctx.moveTo(px(x), py(x));
    ctx.lineTo(px(succ[x]), py(succ[x]));
    ctx.stroke();
  }
  for (let x = 0; x < n; x++) {
    ctx.beginPath();
    ctx.arc(px(x), py(x), hit.has(x) ? 5 : 3, 0, 2 * Math.PI);
    ctx.fillStyle = hit.has(x) ? "#c0392b" : "#555";
    ctx.fill();
  }
}

await init();

$("hs-run").onclick = () =>
  guarded("hs-out", () => {
    const rep = JSON.parse(hitting_set($("hs-kind").value, num("hs-n"), num("hs-r"), num("hs-seed")));
    if (rep.succ.length <= 2000) draw($("hs-canvas"), rep.succ, rep.members);
    $("hs-out").textContent =
      `${rep.members.length} members, horizon ${rep.horizon}, valid ${rep.valid}\n` +
      `members: ${rep.members.join(" ")}`;
  });

$("cl-run").onclick = () =>
  guarded("cl-out", () => {
    $("cl-out").textContent = JSON.stringify(JSON.parse(classify($("cl-input").value)), null, 2);
  });

$("rs-run").onclick = () =>
  guarded("rs-out", () => {
    const rep = JSON.parse(ruling_set(num("rs-n"), num("rs-r"), num("rs-seed")));
    $("rs-out").textContent =
      `${rep.rounds} rounds, ${rep.members.length} members, gaps ${rep.min_gap} to ${rep.max_gap}`;
  });
