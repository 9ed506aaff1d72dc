//! Single-panel SVG line charts rendered straight from our CSV text.
//!
//! A convenience layer only: the CSV is the artifact, the SVG is a quick
//! look at it. Rows with empty cells are skipped; a `curve` column, when
//! present, splits the data into one polyline per curve.

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 500.0;
const MARGIN: f64 = 60.0;
const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f",
];

/// Render the named value column of a CSV document against its abscissa
/// column. Returns None when the CSV has no plottable points.
pub fn chart_from_csv(title: &str, csv: &str, y_column: &str) -> Option<String> {
    let mut lines = csv.lines();
    let header: Vec<&str> = lines.next()?.split(',').collect();
    let curve_idx = header.iter().position(|c| *c == "curve");
    // abscissa: the first non-curve column (omega or t)
    let x_idx = curve_idx.map_or(0, |i| i + 1);
    let x_label = header.get(x_idx)?.to_string();
    let y_idx = header.iter().position(|c| *c == y_column)?;

    let mut series: Vec<(String, Vec<(f64, f64)>)> = Vec::new();
    for line in lines {
        let cells: Vec<&str> = line.split(',').collect();
        let (Some(xs), Some(ys)) = (cells.get(x_idx), cells.get(y_idx)) else {
            continue;
        };
        let (Ok(x), Ok(y)) = (xs.parse::<f64>(), ys.parse::<f64>()) else {
            continue;
        };
        let label = curve_idx
            .and_then(|i| cells.get(i))
            .unwrap_or(&y_column)
            .to_string();
        match series.iter_mut().find(|(l, _)| *l == label) {
            Some((_, pts)) => pts.push((x, y)),
            None => series.push((label, vec![(x, y)])),
        }
    }
    if series.iter().all(|(_, pts)| pts.is_empty()) {
        return None;
    }

    let all = series.iter().flat_map(|(_, pts)| pts.iter());
    let (mut x_min, mut x_max) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut y_min, mut y_max) = (f64::INFINITY, f64::NEG_INFINITY);
    for &(x, y) in all {
        x_min = x_min.min(x);
        x_max = x_max.max(x);
        y_min = y_min.min(y);
        y_max = y_max.max(y);
    }
    if x_min == x_max {
        x_max = x_min + 1.0;
    }
    if y_min == y_max {
        y_max = y_min + 1.0;
    }

    let sx = (WIDTH - 2.0 * MARGIN) / (x_max - x_min);
    let sy = (HEIGHT - 2.0 * MARGIN) / (y_max - y_min);
    let px = |x: f64| MARGIN + (x - x_min) * sx;
    let py = |y: f64| HEIGHT - MARGIN - (y - y_min) * sy;

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n"
    ));
    out.push_str(&format!(
        "<rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>\n"
    ));
    out.push_str(&format!(
        "<text x=\"{}\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\" \
         text-anchor=\"middle\">{title}</text>\n",
        WIDTH / 2.0
    ));
    // axes
    out.push_str(&format!(
        "<line x1=\"{m}\" y1=\"{b}\" x2=\"{r}\" y2=\"{b}\" stroke=\"black\"/>\n\
         <line x1=\"{m}\" y1=\"{t}\" x2=\"{m}\" y2=\"{b}\" stroke=\"black\"/>\n",
        m = MARGIN,
        b = HEIGHT - MARGIN,
        r = WIDTH - MARGIN,
        t = MARGIN
    ));
    out.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"12\" \
         text-anchor=\"middle\">{x_label}: {x_min} to {x_max}</text>\n",
        WIDTH / 2.0,
        HEIGHT - 18.0
    ));
    out.push_str(&format!(
        "<text x=\"18\" y=\"{}\" font-family=\"sans-serif\" font-size=\"12\" \
         text-anchor=\"middle\" transform=\"rotate(-90 18 {})\">{y_column}: {y_min} to {y_max}</text>\n",
        HEIGHT / 2.0,
        HEIGHT / 2.0
    ));

    for (i, (label, pts)) in series.iter().enumerate() {
        if pts.is_empty() {
            continue;
        }
        let color = PALETTE[i % PALETTE.len()];
        let mut path = String::new();
        for (j, &(x, y)) in pts.iter().enumerate() {
            path.push_str(if j == 0 { "M" } else { " L" });
            path.push_str(&format!("{:.2} {:.2}", px(x), py(y)));
        }
        out.push_str(&format!(
            "<path d=\"{path}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\"/>\n"
        ));
        out.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"12\" \
             fill=\"{color}\">{label}</text>\n",
            WIDTH - MARGIN + 4.0,
            MARGIN + 16.0 * i as f64
        ));
    }
    out.push_str("</svg>\n");
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_polylines_per_curve() {
        let csv = "curve,omega,m_eff,status\n\
                   a,1,2,OK\na,2,3,OK\nb,1,4,OK\nb,2,,MassNonPositive\n";
        let svg = chart_from_csv("demo", csv, "m_eff").unwrap();
        assert_eq!(svg.matches("<path").count(), 2);
        assert!(svg.contains("</svg>"));
    }

    #[test]
    fn empty_data_yields_none() {
        let csv = "omega,m_eff,status\n1,,Bad\n";
        assert!(chart_from_csv("demo", csv, "m_eff").is_none());
    }
}
