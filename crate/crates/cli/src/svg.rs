// SPDX-License-Identifier: Apache-2.0
//! Minimal deterministic SVG canvas with a fixed 800×800 viewport.

use std::fmt::Write;

pub const SIZE: f64 = 800.0;
const MARGIN: f64 = 40.0;
pub const PALETTE: [&str; 6] = ["#1f5fa8", "#c0392b", "#2e8b57", "#8e44ad", "#d35400", "#555555"];

pub struct Canvas {
    x0: f64,
    y0: f64,
    scale: f64,
    body: String,
}

impl Canvas {
    /// Square window around `[xmin, xmax] × [ymin, ymax]` with equal axis scales.
    pub fn new(xmin: f64, xmax: f64, ymin: f64, ymax: f64) -> Self {
        let span = (xmax - xmin).max(ymax - ymin).max(1e-9);
        let cx = (xmin + xmax) / 2.0;
        let cy = (ymin + ymax) / 2.0;
        Canvas {
            x0: cx - span / 2.0,
            y0: cy - span / 2.0,
            scale: (SIZE - 2.0 * MARGIN) / span,
            body: String::new(),
        }
    }

    /// Symmetric window `[-r, r]²`.
    pub fn centered(r: f64) -> Self {
        Canvas::new(-r, r, -r, r)
    }

    fn px(&self, x: f64, y: f64) -> (f64, f64) {
        (
            MARGIN + (x - self.x0) * self.scale,
            SIZE - MARGIN - (y - self.y0) * self.scale,
        )
    }

    fn span(&self) -> f64 {
        (SIZE - 2.0 * MARGIN) / self.scale
    }

    /// Coordinate axes with integer ticks when they fit.
    pub fn axes(&mut self) {
        let (lo_x, lo_y) = (self.x0, self.y0);
        let (hi_x, hi_y) = (lo_x + self.span(), lo_y + self.span());
        if (lo_y..=hi_y).contains(&0.0) {
            self.line(lo_x, 0.0, hi_x, 0.0, "#999999", 1.0);
        }
        if (lo_x..=hi_x).contains(&0.0) {
            self.line(0.0, lo_y, 0.0, hi_y, "#999999", 1.0);
        }
        if self.span() <= 24.0 {
            for k in (lo_x.ceil() as i64)..=(hi_x.floor() as i64) {
                if k != 0 {
                    let (px, py) = self.px(k as f64, 0.0);
                    let _ = write!(
                        self.body,
                        r##"<line x1="{px:.2}" y1="{:.2}" x2="{px:.2}" y2="{:.2}" stroke="#999999"/><text x="{px:.2}" y="{:.2}" font-size="11" text-anchor="middle">{k}</text>"##,
                        py - 3.0,
                        py + 3.0,
                        py + 15.0
                    );
                    self.body.push('\n');
                }
            }
            for k in (lo_y.ceil() as i64)..=(hi_y.floor() as i64) {
                if k != 0 {
                    let (px, py) = self.px(0.0, k as f64);
                    let _ = write!(
                        self.body,
                        r##"<line x1="{:.2}" y1="{py:.2}" x2="{:.2}" y2="{py:.2}" stroke="#999999"/><text x="{:.2}" y="{:.2}" font-size="11">{k}</text>"##,
                        px - 3.0,
                        px + 3.0,
                        px + 5.0,
                        py + 4.0
                    );
                    self.body.push('\n');
                }
            }
        }
    }

    pub fn line(&mut self, x1: f64, y1: f64, x2: f64, y2: f64, color: &str, width: f64) {
        let (a, b) = self.px(x1, y1);
        let (c, d) = self.px(x2, y2);
        let _ = writeln!(
            self.body,
            r#"<line x1="{a:.2}" y1="{b:.2}" x2="{c:.2}" y2="{d:.2}" stroke="{color}" stroke-width="{width}"/>"#
        );
    }

    pub fn polyline(&mut self, pts: &[(f64, f64)], color: &str) {
        let coords: Vec<String> = pts
            .iter()
            .map(|&(x, y)| {
                let (a, b) = self.px(x, y);
                format!("{a:.2},{b:.2}")
            })
            .collect();
        let _ = writeln!(
            self.body,
            r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="2"/>"#,
            coords.join(" ")
        );
    }

    pub fn dot(&mut self, x: f64, y: f64, r: f64, color: &str) {
        let (a, b) = self.px(x, y);
        let _ = writeln!(self.body, r#"<circle cx="{a:.2}" cy="{b:.2}" r="{r}" fill="{color}"/>"#);
    }

    pub fn rect(&mut self, xmin: f64, ymin: f64, xmax: f64, ymax: f64, color: &str) {
        let (a, b) = self.px(xmin, ymax);
        let (c, d) = self.px(xmax, ymin);
        let _ = writeln!(
            self.body,
            r#"<rect x="{a:.2}" y="{b:.2}" width="{:.2}" height="{:.2}" fill="{color}" fill-opacity="0.2" stroke="{color}" stroke-width="2"/>"#,
            c - a,
            d - b
        );
    }

    pub fn label(&mut self, x: f64, y: f64, text: &str) {
        let (a, b) = self.px(x, y);
        let _ = writeln!(
            self.body,
            r#"<text x="{:.2}" y="{:.2}" font-size="13">{}</text>"#,
            a + 6.0,
            b - 6.0,
            escape(text)
        );
    }

    pub fn finish(self, title: &str) -> String {
        format!(
            concat!(
                r#"<svg xmlns="http://www.w3.org/2000/svg" width="800" height="800" viewBox="0 0 800 800">"#,
                "\n<title>{}</title>\n",
                r#"<rect width="800" height="800" fill="white"/>"#,
                "\n{}</svg>\n"
            ),
            escape(title),
            self.body
        )
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
