//! ASCII pictures of diagrams and elements.
//!
//! Top points on the first row, bottom points on the last. Cups hanging from
//! the top are drawn as `\_/` at a depth equal to their nesting; caps rising
//! from the bottom as `/^\`; the middle row lists through-strands.

use super::diagram::TlDiagram;
use super::element::TlElement;

const COL: usize = 4;

fn arcs_on_side(d: &TlDiagram, top: bool) -> Vec<(usize, usize, usize)> {
    let (base, count) = if top { (d.nb(), d.nt()) } else { (0, d.nb()) };
    let mut arcs = Vec::new();
    for i in 0..count {
        let q = d.partner(base + i);
        if q > base + i && q < base + count {
            arcs.push((i, q - base, 0));
        }
    }
    // nesting depth: number of arcs strictly inside plus one
    let spans: Vec<(usize, usize)> = arcs.iter().map(|&(a, b, _)| (a, b)).collect();
    for arc in arcs.iter_mut() {
        let inside = spans
            .iter()
            .filter(|&&(a, b)| a > arc.0 && b < arc.1)
            .count();
        arc.2 = inside;
    }
    arcs
}

fn draw_arcs(width: usize, arcs: &[(usize, usize, usize)], top: bool) -> Vec<String> {
    let depth = arcs.iter().map(|a| a.2 + 1).max().unwrap_or(0);
    let mut rows = vec![vec![b' '; width]; depth];
    for &(a, b, lvl) in arcs {
        let row = if top { lvl } else { depth - 1 - lvl };
        let (xa, xb) = (a * COL + 1, b * COL + 1);
        for x in xa + 1..xb {
            rows[row][x] = if top { b'_' } else { b'^' };
        }
        rows[row][xa] = if top { b'\\' } else { b'/' };
        rows[row][xb] = if top { b'/' } else { b'\\' };
        // legs down to the row of the arc
        let legs: Box<dyn Iterator<Item = usize>> = if top {
            Box::new(0..row)
        } else {
            Box::new(row + 1..depth)
        };
        for r in legs {
            rows[r][xa] = b'|';
            rows[r][xb] = b'|';
        }
    }
    rows.into_iter()
        .map(|r| String::from_utf8(r).unwrap().trim_end().to_string())
        .collect()
}

pub fn render_diagram(d: &TlDiagram) -> String {
    let width = d.nb().max(d.nt()).max(1) * COL + 2;
    let mut lines = Vec::new();
    let mut header = String::new();
    for i in 0..d.nt() {
        header.push_str(&format!(" {:<3}", format!("o{}", i + 1)));
    }
    lines.push(header.trim_end().to_string());
    lines.extend(draw_arcs(width, &arcs_on_side(d, true), true));
    let mut through = Vec::new();
    for i in 0..d.nb() {
        let q = d.partner(i);
        if q >= d.nb() {
            through.push(format!("{}|{}", i + 1, q - d.nb() + 1));
        }
    }
    if !through.is_empty() {
        lines.push(format!(" through b|t: {}", through.join(" ")));
    }
    lines.extend(draw_arcs(width, &arcs_on_side(d, false), false));
    let mut footer = String::new();
    for i in 0..d.nb() {
        footer.push_str(&format!(" {:<3}", format!("o{}", i + 1)));
    }
    lines.push(footer.trim_end().to_string());
    lines.join("\n")
}

pub fn render_element(e: &TlElement) -> String {
    let mut out = String::new();
    for (d, c) in e.terms() {
        out.push_str(&format!("+ ({c}) ·\n"));
        for line in render_diagram(d).lines() {
            out.push_str("    ");
            out.push_str(line);
            out.push('\n');
        }
    }
    if out.is_empty() {
        out.push_str("0\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cupcap_picture() {
        let s = render_diagram(&TlDiagram::cupcap(2, 0));
        assert!(s.contains("\\___/"));
        assert!(s.contains("/^^^\\"));
        assert!(!s.contains("through"));
    }
}
