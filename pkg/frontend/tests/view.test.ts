import { describe, expect, it } from "vitest";

import {
  escapeHtml,
  renderBanner,
  renderRecommendations,
  renderStatus,
  renderTourSummary,
  scoreChangesBySpot,
} from "../src/view.js";
import { recommendation, route, snapshot, visit } from "./helpers.js";

const demo = recommendation(
  [
    route(
      1,
      [visit("13:00", "A", "7.0"), visit("15:00", "F", "6.0"), visit("17:00", "C", "9.0")],
      "22.0",
    ),
    route(2, [visit("13:00", "F", "7.0"), visit("15:00", "A", "6.0")], "13.0", 60),
  ],
  { mean_tour_score: "17.5" },
);

describe("renderRecommendations", () => {
  it("shows each visit as time, spot, and the service's score string", () => {
    const html = renderRecommendations(demo);
    expect(html).toContain("13:00 A (7.0)");
    expect(html).toContain("15:00 F (6.0)");
    expect(html).toContain("17:00 C (9.0)");
  });

  it("shows total, spot count, and free time per card", () => {
    const html = renderRecommendations(demo);
    expect(html).toContain("score 22.0");
    expect(html).toContain("3 spots");
    expect(html).toContain("free 0 min");
    expect(html).toContain("free 60 min");
  });

  it("keeps the service's card order", () => {
    const html = renderRecommendations(demo);
    expect(html.indexOf("score 22.0")).toBeLessThan(html.indexOf("score 13.0"));
  });

  it("offers a commit button for the head visit only", () => {
    const html = renderRecommendations(demo);
    expect(html).toContain('data-rank="1" data-spot="A" data-arrival="13:00"');
    expect(html).not.toContain('data-spot="C"');
  });

  it("shows the mean score and algorithm footer", () => {
    const html = renderRecommendations(demo);
    expect(html).toContain("mean tour score 17.5");
    expect(html).toContain("algorithm B, width 1");
  });

  it("omits the width when the service sent none", () => {
    const html = renderRecommendations(recommendation([route(1, [], "0.0")], { width: null }));
    expect(html).toContain("algorithm B");
    expect(html).not.toContain("width");
  });

  it("renders inline card errors where the conflict happened", () => {
    const html = renderRecommendations(
      demo,
      new Map(),
      new Map([[2, "A->C: earliest hand-off 16:00 misses the 14:00 arrival"]]),
    );
    expect(html).toContain("card-error");
    expect(html).toContain("misses the 14:00 arrival");
  });

  it("renders a friendly empty state", () => {
    const html = renderRecommendations(recommendation([]));
    expect(html).toContain("No feasible route");
  });

  it("escapes markup in service strings", () => {
    const nasty = recommendation([
      route(1, [visit("13:00", "<script>alert(1)</script>", "1.0")], "1.0"),
    ]);
    const html = renderRecommendations(nasty);
    expect(html).not.toContain("<script>alert(1)</script>");
    expect(html).toContain("&lt;script&gt;");
  });
});

describe("scoreChangesBySpot", () => {
  it("is empty for an identity toggle", () => {
    expect(scoreChangesBySpot(demo, demo).size).toBe(0);
  });

  it("reports per-spot deltas between two responses", () => {
    const rained = recommendation([
      route(
        1,
        [visit("13:00", "A", "5.0"), visit("15:00", "F", "4.0"), visit("17:00", "C", "7.0")],
        "16.0",
      ),
    ]);
    const changes = scoreChangesBySpot(demo, rained);
    expect(changes.get("A")).toBe(-2);
    expect(changes.get("F")).toBe(-2);
    expect(changes.get("C")).toBe(-2);
  });

  it("renders deltas as signed chips next to the visit", () => {
    const rained = recommendation([route(1, [visit("13:00", "A", "5.0")], "5.0")]);
    const html = renderRecommendations(rained, scoreChangesBySpot(demo, rained));
    expect(html).toContain("▼ -2.0");
    expect(html).toContain('class="delta down"');
  });
});

describe("renderStatus", () => {
  it("shows position, clock, window, and running score from the snapshot", () => {
    const html = renderStatus(
      snapshot({
        position: "A",
        now: "14:00",
        running_score: "7.0",
        committed: [visit("13:00", "A", "7.0")],
      }),
    );
    expect(html).toContain("<dd>A</dd>");
    expect(html).toContain("<dd>14:00</dd>");
    expect(html).toContain("13:00–18:00");
    expect(html).toContain("7.0");
    expect(html).toContain("13:00 A (7.0)");
  });

  it("says when nothing is committed yet", () => {
    expect(renderStatus(snapshot())).toContain("nothing committed yet");
  });
});

describe("renderTourSummary", () => {
  it("lists the committed tour with its total", () => {
    const html = renderTourSummary(
      snapshot({
        tour_over: true,
        running_score: "17.0",
        committed: [
          visit("13:00", "A", "7.0"),
          visit("15:00", "C", "6.0"),
          visit("17:00", "G", "4.0"),
        ],
      }),
    );
    expect(html).toContain("Tour complete");
    expect(html).toContain("score 17.0");
    expect(html).toContain("3 spots visited");
    expect(html).toContain("17:00 G (4.0)");
  });
});

describe("renderBanner", () => {
  it("carries the message and a retry button", () => {
    const html = renderBanner("cannot reach service");
    expect(html).toContain("cannot reach service");
    expect(html).toContain('class="retry"');
  });
});

describe("escapeHtml", () => {
  it("neutralizes the five specials", () => {
    expect(escapeHtml(`<a href="x">&'</a>`)).toBe(
      "&lt;a href=&quot;x&quot;&gt;&amp;&#39;&lt;/a&gt;",
    );
  });
});
