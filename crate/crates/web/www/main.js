import init, { relationProbes, relationView, routeView, similarityView } from "./pkg/embedgraph_web.js";

const $ = (id) => document.getElementById(id);

function slider(min, max, step, value, oninput) {
  const input = document.createElement("input");
  Object.assign(input, { type: "range", min, max, step, value });
  input.addEventListener("input", oninput);
  return input;
}

function show(target, fn) {
  try {
    fn();
  } catch (e) {
    target.textContent = String(e);
    target.className = "error";
  }
}

function setupRelations() {
  const probes = JSON.parse(relationProbes());
  const select = $("probe");
  const cutoff = $("cutoff");
  for (const [probe] of probes) {
    select.add(new Option(probe, probe));
  }
  const render = () => show($("relation-table"), () => {
    const view = JSON.parse(relationView(select.value, Number(cutoff.value)));
    $("cutoff-value").textContent = view.cutoff.toFixed(2);
    const kept = new Set(view.kept);
    const table = $("relation-table");
    table.className = "";
    table.replaceChildren(...view.weights.map(([word, w]) => {
      const row = document.createElement("tr");
      row.className = kept.has(word) ? "kept" : "dropped";
      row.innerHTML = `<td>me &rarr; ${word}</td><td>${w.toFixed(2)}</td>`;
      return row;
    }));
  });
  select.addEventListener("change", () => {
    cutoff.value = probes.find(([p]) => p === select.value)[1];
    render();
  });
  cutoff.value = probes[0][1];
  cutoff.addEventListener("input", render);
  render();
}

function setupRoutes() {
  const edges = [["rely", "d → b", 0.77], ["appreciate", "d → c", 0.76], ["respect", "b → a", 0.58], ["envy", "c → a", 0.82]];
  const inputs = [];
  const render = () => show($("route-best"), () => {
    inputs.forEach((input) => { input.previousSibling.lastChild.textContent = Number(input.value).toFixed(2); });
    const view = JSON.parse(routeView(new Float64Array(inputs.map((i) => Number(i.value)))));
    $("route-best").className = "";
    $("route-best").textContent = `${view.shortest.join(" → ")} (${view.total.toFixed(2)})`;
    $("route-b").textContent = view.via_b.toFixed(2);
    $("route-c").textContent = view.via_c.toFixed(2);
  });
  for (const [word, edge, d] of edges) {
    const label = document.createElement("label");
    label.append(`${edge} ${word} `, document.createElement("output"));
    const input = slider(0, 2, 0.01, d, render);
    inputs.push(input);
    $("route-sliders").append(label, input, document.createElement("br"));
  }
  render();
}

function setupSimilarity() {
  const edges = ["teacher → students", "teacher → blackboard", "students → teacher", "students → text", "students → pen"];
  const first = [];
  const second = [];
  const render = () => show($("similarity-value"), () => {
    const view = JSON.parse(similarityView(
      new Float64Array(first.map((i) => Number(i.value))),
      new Float64Array(second.map((i) => Number(i.value))),
    ));
    $("similarity-value").className = "";
    $("similarity-value").textContent = view.similarity.toFixed(2);
  });
  const table = $("similarity-sliders");
  table.innerHTML = "<tr><td>edge</td><td>first graph (°)</td><td>second graph (°)</td></tr>";
  edges.forEach((edge, i) => {
    const a = slider(0, 180, 1, 20 * i, render);
    const b = slider(0, 180, 1, 20 * i + 30, render);
    first.push(a);
    second.push(b);
    const row = document.createElement("tr");
    const cells = [edge, a, b].map((c) => {
      const td = document.createElement("td");
      td.append(c);
      return td;
    });
    row.append(...cells);
    table.append(row);
  });
  render();
}

init().then(() => {
  setupRelations();
  setupRoutes();
  setupSimilarity();
}).catch((e) => {
  $("status").textContent = `failed to load the WebAssembly module: ${e}`;
  $("status").className = "error";
});
