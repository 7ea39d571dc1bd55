//! Coordinate lines of the intrinsic charts, sampled as polylines in
//! Beltrami coordinates `(s1/s0, s2/s0)`.

use serde::Serialize;

use crate::algebra::KappaPair;
use crate::error::{Error, Result};
use crate::kappa_trig::half_period;
use crate::spaces::{to_ambient, Chart, ChartPoint};

/// Which family of lines to sample and how far.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FamilySpec {
    /// Lines per family.
    pub lines: usize,
    /// Half-width of the coordinate window (radius for polar rays).
    pub extent: f64,
}

impl Default for FamilySpec {
    fn default() -> Self {
        Self { lines: 5, extent: 1.0 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GeodesicRow {
    pub family_id: usize,
    pub t: f64,
    pub beltrami1: Option<f64>,
    pub beltrami2: Option<f64>,
    pub status: String,
}

fn spaced(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| if n == 1 { 0.5 * (lo + hi) } else { lo + (hi - lo) * i as f64 / (n - 1) as f64 })
}

/// Sample both coordinate-line families of a chart.
///
/// Family ids `0..lines` vary the first coordinate with the second fixed;
/// ids `lines..2*lines` vary the second with the first fixed. For the polar
/// chart the first family is the rays from the origin (`t = r ≥ 0`), the
/// second the circles `r = const`. Points outside the chart, or at infinity
/// in Beltrami coordinates, are kept as rows with a status message.
pub fn export_geodesics(kp: KappaPair, chart: Chart, spec: FamilySpec, n: usize) -> Result<Vec<GeodesicRow>> {
    if n < 2 || spec.lines == 0 || !(spec.extent > 0.0) {
        return Err(Error::InvalidParameter("need n >= 2, lines >= 1 and a positive extent".into()));
    }
    let e = spec.extent;
    let (first_t, first_fixed, second_t, second_fixed): (Vec<f64>, Vec<f64>, Vec<f64>, Vec<f64>) = match chart {
        Chart::ParallelI | Chart::ParallelII => (
            spaced(-e, e, n).collect(),
            spaced(-e, e, spec.lines).collect(),
            spaced(-e, e, n).collect(),
            spaced(-e, e, spec.lines).collect(),
        ),
        Chart::Polar => {
            // rays over a full turn when the angle is periodic
            let hp = half_period(kp.k2).min(e);
            (
                spaced(0.0, e, n).collect(),
                spaced(-hp, hp, spec.lines + usize::from(hp.is_finite() && hp < e))
                    .take(spec.lines)
                    .collect(),
                spaced(-hp, hp, n).collect(),
                spaced(e / spec.lines as f64, e, spec.lines).collect(),
            )
        }
        Chart::Ambient => {
            return Err(Error::InvalidParameter("coordinate lines need a two-dimensional chart".into()));
        }
    };
    let mut rows = Vec::with_capacity(2 * spec.lines * n);
    let mut emit = |family_id: usize, t: f64, c: [f64; 2]| {
        let row = |b: Option<(f64, f64)>, status: String| GeodesicRow {
            family_id,
            t,
            beltrami1: b.map(|v| v.0),
            beltrami2: b.map(|v| v.1),
            status,
        };
        let p = ChartPoint::from_coords(chart, c).expect("two-dimensional chart");
        rows.push(match to_ambient(kp, &p) {
            Ok(s) => match s.beltrami() {
                Some(b) => row(Some(b), "ok".into()),
                None => row(None, "at infinity".into()),
            },
            Err(err) => row(None, err.to_string()),
        });
    };
    for (j, &fixed) in first_fixed.iter().enumerate() {
        for &t in &first_t {
            emit(j, t, [t, fixed]);
        }
    }
    for (j, &fixed) in second_fixed.iter().enumerate() {
        for &t in &second_t {
            emit(spec.lines + j, t, [fixed, t]);
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn galilean_leaves_are_vertical() {
        let rows = export_geodesics(KappaPair::new(0.0, 0.0), Chart::ParallelI, FamilySpec::default(), 7).unwrap();
        for r in rows.iter().filter(|r| r.family_id >= 5) {
            let first = rows.iter().find(|q| q.family_id == r.family_id).unwrap();
            assert_eq!(r.beltrami1, first.beltrami1);
            assert_eq!(r.status, "ok");
        }
    }

    #[test]
    fn rejects_bad_sizes() {
        assert!(export_geodesics(KappaPair::new(1.0, 1.0), Chart::Polar, FamilySpec::default(), 1).is_err());
        assert!(export_geodesics(KappaPair::new(1.0, 1.0), Chart::Ambient, FamilySpec::default(), 5).is_err());
    }
}
