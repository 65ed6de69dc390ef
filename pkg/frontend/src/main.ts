/** DOM wiring: connects the controller to the page. */

import { createClient } from "./api.js";
import { TourController, type ViewState } from "./controller.js";
import type { Algorithm, WeatherCondition } from "./types.js";
import {
  renderBanner,
  renderRecommendations,
  renderStatus,
  renderTourSummary,
  scoreChangesBySpot,
} from "./view.js";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing #${id}`);
  }
  return node as T;
}

function render(state: ViewState): void {
  el("banner").innerHTML = state.banner ? renderBanner(state.banner) : "";
  el("status").innerHTML = state.snapshot ? renderStatus(state.snapshot) : "";

  const panel = el("recommendations");
  if (state.snapshot?.tour_over) {
    panel.innerHTML = renderTourSummary(state.snapshot);
  } else if (state.routes) {
    const changes = state.routesBeforeToggle
      ? scoreChangesBySpot(state.routesBeforeToggle, state.routes)
      : new Map<string, number>();
    panel.innerHTML = renderRecommendations(state.routes, changes, state.cardErrors);
  } else {
    panel.innerHTML = "";
  }
}

function wire(): void {
  const base = (el<HTMLInputElement>("service-url")).value || window.location.origin;
  const controller = new TourController(createClient(base));
  controller.onChange(render);

  el("recommendations").addEventListener("click", (event) => {
    const button = (event.target as HTMLElement).closest<HTMLButtonElement>(".commit");
    if (button) {
      void controller.commitNext(
        button.dataset.spot ?? "",
        button.dataset.arrival ?? "",
        Number(button.dataset.rank ?? 1),
      );
    }
  });

  el("banner").addEventListener("click", (event) => {
    if ((event.target as HTMLElement).closest(".retry")) {
      void controller.retry();
    }
  });

  el<HTMLSelectElement>("weather").addEventListener("change", (event) => {
    const condition = (event.target as HTMLSelectElement).value as WeatherCondition;
    void controller.setWeather(condition);
  });

  const applyAlgorithm = () => {
    const algorithm = el<HTMLSelectElement>("algorithm").value as Algorithm;
    const width = Number(el<HTMLInputElement>("width").value) || 3;
    el<HTMLInputElement>("width").disabled = algorithm !== "C";
    void controller.selectAlgorithm(algorithm, width);
  };
  el<HTMLSelectElement>("algorithm").addEventListener("change", applyAlgorithm);
  el<HTMLInputElement>("width").addEventListener("change", applyAlgorithm);

  el<HTMLFormElement>("congestion-form").addEventListener("submit", (event) => {
    event.preventDefault();
    const spot = el<HTMLInputElement>("congestion-spot").value.trim();
    const samples = el<HTMLInputElement>("congestion-samples")
      .value.split(",")
      .map((s) => Number(s.trim()))
      .filter((n) => Number.isFinite(n) && n >= 0);
    if (spot && samples.length) {
      void controller.setCongestion(spot, samples);
    }
  });

  el<HTMLFormElement>("session-form").addEventListener("submit", (event) => {
    event.preventDefault();
    const name = el<HTMLSelectElement>("scenario").value;
    void controller.start({ builtin: name });
  });

  void controller.start({ builtin: el<HTMLSelectElement>("scenario").value });
}

window.addEventListener("DOMContentLoaded", wire);
