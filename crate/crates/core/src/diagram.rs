//! Dot-and-line pictures of finite functions as a fixed ASCII grid.
//!
//! Domain dots sit in the left column and codomain dots in the right one,
//! numbered from the top. Element `k` occupies grid row `2(k-1)`. Each
//! domain element gets one line to its image. A sloped stroke wins over a
//! flat one in a shared cell; opposite slopes meet as `X`.

use crate::finord::FinFun;

const DOT: char = 'o';
const CROSS: char = 'X';

fn row_of(k: usize) -> usize {
    2 * (k - 1)
}

pub fn render(f: &FinFun) -> String {
    let points = f.dom().max(f.cod());
    if points == 0 {
        return String::new();
    }
    let height = 2 * points - 1;
    let max_drop = (1..=f.dom())
        .map(|j| row_of(j).abs_diff(row_of(f.apply(j))))
        .max()
        .unwrap_or(0);
    let width = 2 * max_drop + 6;

    let mut grid = vec![vec![' '; width + 1]; height];
    for k in 1..=f.dom() {
        grid[row_of(k)][0] = DOT;
    }
    for k in 1..=f.cod() {
        grid[row_of(k)][width] = DOT;
    }

    for j in 1..=f.dom() {
        let (from, to) = (row_of(j), row_of(f.apply(j)));
        let drop = from.abs_diff(to);
        // rounded row of the line at column c, measured from `from`
        let y = |c: usize| {
            let off = (2 * drop * c + width) / (2 * width);
            if to >= from {
                from + off
            } else {
                from - off
            }
        };
        let slope = if to > from { '\\' } else { '/' };
        for c in 1..width {
            let here = y(c);
            let stroke = if drop == 0 || (y(c - 1) == here && y(c + 1) == here) {
                '-'
            } else {
                slope
            };
            let cell = &mut grid[here][c];
            *cell = match *cell {
                ' ' => stroke,
                existing if existing == stroke => stroke,
                '-' => stroke,
                _ if stroke == '-' => *cell,
                _ => CROSS,
            };
        }
    }

    let label_width = points.to_string().len();
    let mut out = String::new();
    for (r, cells) in grid.iter().enumerate() {
        let label = |present: bool| {
            if r % 2 == 0 && present {
                (r / 2 + 1).to_string()
            } else {
                String::new()
            }
        };
        let left = label(r / 2 < f.dom());
        let right = label(r / 2 < f.cod());
        let body: String = cells.iter().collect();
        let line = format!("{left:>label_width$} {body} {right}");
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
