#!/usr/bin/env python3
# Copyright 2026 The DocDjinn Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Headless Chromium renderer for `docdjinn --renderer command:...`.

    render_playwright.py measure PAGE.html OUTDIR
    render_playwright.py render  PAGE.html OUTDIR WIDTH HEIGHT

measure writes {"width", "height"} to OUTDIR/layout.json. render writes
layout.json (page_count, width, height, element_boxes, word_boxes),
page.png and page.pdf. Requires `pip install playwright` and
`playwright install chromium`.
"""

import json
import math
import pathlib
import sys

VIEWPORT_WIDTH = 794  # A4 at 96 dpi

LAYOUT_JS = """
() => {
  const REF = 'data-ddj-ref';
  const round = r => [Math.floor(r.left), Math.floor(r.top), Math.ceil(r.right), Math.ceil(r.bottom)];
  const elements = {};
  for (const el of document.querySelectorAll('[' + REF + ']')) {
    const r = el.getBoundingClientRect();
    if (r.width > 0 && r.height > 0) elements[el.getAttribute(REF)] = round(r);
  }
  const words = [];
  const walker = document.createTreeWalker(document.body, NodeFilter.SHOW_TEXT);
  const range = document.createRange();
  for (let node = walker.nextNode(); node; node = walker.nextNode()) {
    const owner = node.parentElement && node.parentElement.closest('[' + REF + ']');
    if (!owner) continue;
    const style = getComputedStyle(node.parentElement);
    if (style.visibility === 'hidden' || style.display === 'none') continue;
    const re = /\\S+/g;
    let m;
    while ((m = re.exec(node.data)) !== null) {
      range.setStart(node, m.index);
      range.setEnd(node, m.index + m[0].length);
      const r = range.getBoundingClientRect();
      if (r.width <= 0 || r.height <= 0) continue;
      words.push({text: m[0], box: round(r), element_ref: owner.getAttribute(REF)});
    }
  }
  let breaks = 0;
  for (const el of document.body.querySelectorAll('*')) {
    const s = getComputedStyle(el);
    if (s.breakBefore === 'page' || s.pageBreakBefore === 'always') breaks += 1;
  }
  return {
    elements, words, breaks,
    width: document.documentElement.scrollWidth,
    height: document.documentElement.scrollHeight,
  };
}
"""


def main(argv):
    try:
        from playwright.sync_api import sync_playwright
    except ImportError:
        print("playwright is not installed", file=sys.stderr)
        return 2
    if len(argv) < 4 or argv[1] not in ("measure", "render"):
        print(__doc__, file=sys.stderr)
        return 2
    op, page_path, outdir = argv[1], pathlib.Path(argv[2]), pathlib.Path(argv[3])
    outdir.mkdir(parents=True, exist_ok=True)
    with sync_playwright() as p:
        browser = p.chromium.launch()
        if op == "measure":
            page = browser.new_page(viewport={"width": VIEWPORT_WIDTH, "height": 1123})
            page.goto(page_path.resolve().as_uri())
            layout = page.evaluate(LAYOUT_JS)
            out = {"width": layout["width"], "height": layout["height"]}
        else:
            width, height = int(argv[4]), int(argv[5])
            page = browser.new_page(viewport={"width": width, "height": height})
            page.goto(page_path.resolve().as_uri())
            layout = page.evaluate(LAYOUT_JS)
            page.screenshot(path=str(outdir / "page.png"), clip={"x": 0, "y": 0, "width": width, "height": height})
            page.pdf(path=str(outdir / "page.pdf"), width=f"{width}px", height=f"{height}px",
                     print_background=True)
            pages = max(1 + layout["breaks"], math.ceil(layout["height"] / height))
            out = {
                "page_count": pages,
                "width": width,
                "height": height,
                "element_boxes": layout["elements"],
                "word_boxes": layout["words"],
            }
        browser.close()
    (outdir / "layout.json").write_text(json.dumps(out))
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
