//! Frequency and time grid construction.

/// `n` evenly spaced points from `start` to `end` inclusive.
pub fn linspace(start: f64, end: f64, n: usize) -> Vec<f64> {
    assert!(n >= 2, "grid needs at least 2 points");
    let step = (end - start) / (n - 1) as f64;
    (0..n)
        .map(|i| {
            if i == n - 1 {
                end
            } else {
                start + step * i as f64
            }
        })
        .collect()
}

/// `n` logarithmically spaced points from `start` to `end` inclusive.
pub fn logspace(start: f64, end: f64, n: usize) -> Vec<f64> {
    assert!(n >= 2, "grid needs at least 2 points");
    assert!(
        start > 0.0 && end > 0.0,
        "log spacing needs positive bounds"
    );
    let (a, b) = (start.log10(), end.log10());
    let step = (b - a) / (n - 1) as f64;
    (0..n)
        .map(|i| {
            if i == n - 1 {
                end
            } else {
                10f64.powf(a + step * i as f64)
            }
        })
        .collect()
}
