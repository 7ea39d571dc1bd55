use serde_json::{json, Map, Value};

use ck_core::export::{export_geodesics, FamilySpec};
use ck_core::poisson::{
    bialgebra_check, cocommutator_map, coisotropy_check, mcybe_defect, phs_points_bracket, rmatrix, schouten,
    schouten_tensor, sklyanin_closed, sklyanin_matrix, Bivector, Coord, DeformationKind, FieldMode, PAIRS,
};
use ck_core::quantum::{
    coassociativity_defect, coproduct_rep, deformed_relation_defects, deformed_relation_defects_in,
    single_copy_defect, FactorRep,
};
use ck_core::spaces::{
    check_domain, convert, gaussian_curvature, induced_metric, metric_main, metric_subsidiary, to_ambient, MetricValue,
};
use ck_core::verify::{run_all, run_suite, schouten_brute_force, Check, SuiteReport, VerifyConfig};
use ck_core::{
    bracket, classify, AlgebraElement, Ambient, Chart, ChartPoint, Duality, Generator,
    GroupCoordinates, KappaPair,
};

use crate::args::{parse_coords, ChartArg, Command, ConfigError, KindArg};

/// Everything a command produces before serialization.
#[derive(Default)]
pub struct Outcome {
    pub rows: Vec<Value>,
    pub checks: Vec<Check>,
    pub suites: Option<Vec<SuiteReport>>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Worst defect of a named check over a list of samples.
struct Tally {
    name: &'static str,
    worst: f64,
    samples: usize,
    errors: Vec<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Self { name, worst: 0.0, samples: 0, errors: Vec::new() }
    }

    fn push(&mut self, d: f64) {
        self.samples += 1;
        self.worst = if d.is_nan() { f64::INFINITY } else { self.worst.max(d) };
    }

    fn push_err(&mut self, e: String) {
        self.samples += 1;
        self.errors.push(e);
    }

    fn finish(self, cfg: &VerifyConfig) -> Check {
        let tolerance = cfg
            .tolerances
            .get(self.name)
            .copied()
            .or_else(|| ck_core::verify::default_tolerance(self.name))
            .expect("registered tolerance");
        Check {
            name: self.name.into(),
            max_defect: self.worst,
            tolerance,
            samples: self.samples,
            passed: self.errors.is_empty() && self.worst <= tolerance,
            errors: self.errors,
        }
    }
}

fn base(kp: KappaPair) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("k1".into(), json!(kp.k1));
    m.insert("k2".into(), json!(kp.k2));
    m
}

fn chart_name(c: Chart) -> &'static str {
    match c {
        Chart::Ambient => "ambient",
        Chart::ParallelI => "parallel-i",
        Chart::ParallelII => "parallel-ii",
        Chart::Polar => "polar",
    }
}

fn gen_key(g: Generator) -> &'static str {
    match g {
        Generator::J01 => "j01",
        Generator::J02 => "j02",
        Generator::J12 => "j12",
    }
}

fn pair_key(p: (usize, usize)) -> String {
    format!("{}^{}", gen_key(Generator::from_index(p.0)), gen_key(Generator::from_index(p.1)))
}

fn make_point(chart: ChartArg, coords: &str) -> Result<ChartPoint, ConfigError> {
    let c = parse_coords(coords)?;
    let chart: Chart = chart.into();
    let want = if chart == Chart::Ambient { 3 } else { 2 };
    if c.len() != want {
        return Err(ConfigError::Invalid(format!("{} takes {want} coordinates, got {}", chart_name(chart), c.len())));
    }
    Ok(match chart {
        Chart::Ambient => ChartPoint::Ambient(Ambient::new(c[0], c[1], c[2])),
        _ => ChartPoint::from_coords(chart, [c[0], c[1]]).expect("two-dimensional chart"),
    })
}

fn point_values(p: &ChartPoint) -> Vec<f64> {
    match p {
        ChartPoint::Ambient(s) => s.to_array().to_vec(),
        _ => p.coords().expect("two-dimensional chart").to_vec(),
    }
}

fn insert_metric(m: &mut Map<String, Value>, prefix: &str, g: ck_core::Result<MetricValue>) {
    match g {
        Ok(g) => {
            m.insert(format!("{prefix}_g11"), json!(g.g11));
            m.insert(format!("{prefix}_g12"), json!(g.g12));
            m.insert(format!("{prefix}_g22"), json!(g.g22));
        }
        Err(e) => {
            m.insert(format!("{prefix}_error"), json!(e.to_string()));
        }
    }
}

fn suite_checks(name: &str, cfg: &VerifyConfig) -> Vec<Check> {
    run_suite(name, cfg).expect("known suite").checks
}

pub fn run(cmd: &Command, cfg: &VerifyConfig) -> Result<Outcome, ConfigError> {
    let mut out = Outcome::default();
    match cmd {
        Command::Classify => {
            for &kp in &cfg.grid {
                let l = classify(kp);
                let mut m = base(kp);
                m.insert("geometry".into(), json!(format!("{:?}", l.geometry)));
                m.insert("name".into(), json!(l.name));
                m.insert("kinematical_name".into(), json!(l.kinematical_name));
                m.insert("group".into(), json!(l.group));
                m.insert("h0".into(), json!(l.h0));
                m.insert("h01".into(), json!(l.h01));
                m.insert("h02".into(), json!(l.h02));
                out.rows.push(Value::Object(m));
            }
        }
        Command::Bracket => {
            for &kp in &cfg.grid {
                for (i, j) in PAIRS {
                    let (x, y) = (Generator::from_index(i), Generator::from_index(j));
                    let b = bracket(kp, AlgebraElement::basis(x), AlgebraElement::basis(y)).to_array();
                    let mut m = base(kp);
                    m.insert("x".into(), json!(x.to_string()));
                    m.insert("y".into(), json!(y.to_string()));
                    for g in Generator::ALL {
                        m.insert(gen_key(g).into(), json!(b[g.index()]));
                    }
                    out.rows.push(Value::Object(m));
                }
            }
            out.checks = suite_checks("algebra", cfg);
        }
        Command::Convert { from, to, coords } => {
            let p = make_point(*from, coords)?;
            let target: Chart = (*to).into();
            let mut rt = Tally::new("geometry-chart-roundtrip");
            for &kp in &cfg.grid {
                let mut m = base(kp);
                m.insert("from".into(), json!(chart_name(p.chart())));
                m.insert("to".into(), json!(chart_name(target)));
                let res = check_domain(kp, &p).and_then(|_| convert(kp, &p, target));
                match res {
                    Ok(q) => {
                        for (k, v) in point_values(&q).into_iter().enumerate() {
                            m.insert(format!("c{}", k + 1), json!(v));
                        }
                        match convert(kp, &q, p.chart()) {
                            // compared on the surface: polar angles are arbitrary at the origin
                            Ok(back) => match (to_ambient(kp, &back), to_ambient(kp, &p)) {
                                (Ok(a), Ok(b)) => rt.push(
                                    a.to_array().iter().zip(b.to_array()).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max),
                                ),
                                (Err(e), _) | (_, Err(e)) => rt.push_err(format!("{kp}: {e}")),
                            },
                            Err(e) => rt.push_err(format!("{kp}: {e}")),
                        }
                    }
                    Err(e) => {
                        m.insert("error".into(), json!(e.to_string()));
                    }
                }
                out.rows.push(Value::Object(m));
            }
            out.checks.push(rt.finish(cfg));
        }
        Command::Metric { chart, coords } => {
            let p = make_point(*chart, coords)?;
            let mut ind = Tally::new("geometry-induced-metric");
            for &kp in &cfg.grid {
                let mut m = base(kp);
                m.insert("chart".into(), json!(chart_name(p.chart())));
                let main = metric_main(kp, &p);
                let induced = induced_metric(kp, &p);
                if let (Ok(a), Ok(b)) = (&main, &induced) {
                    if kp.k2 != 0.0 {
                        ind.push(a.max_abs_diff(b));
                    }
                }
                insert_metric(&mut m, "main", main);
                insert_metric(&mut m, "subsidiary", metric_subsidiary(kp, &p));
                insert_metric(&mut m, "induced", induced);
                out.rows.push(Value::Object(m));
            }
            out.checks.push(ind.finish(cfg));
        }
        Command::Curvature { chart, coords } => {
            let p = make_point(*chart, coords)?;
            let mut cur = Tally::new("geometry-curvature");
            for &kp in &cfg.grid {
                let mut m = base(kp);
                m.insert("chart".into(), json!(chart_name(p.chart())));
                match gaussian_curvature(kp, &p) {
                    Ok(k) => {
                        m.insert("curvature".into(), json!(k));
                        if kp.k2 != 0.0 {
                            cur.push((k - kp.k1).abs());
                        }
                    }
                    Err(e) => {
                        m.insert("error".into(), json!(e.to_string()));
                    }
                }
                out.rows.push(Value::Object(m));
            }
            out.checks.push(cur.finish(cfg));
        }
        Command::Duality { map } => {
            let maps: Vec<Duality> = match map {
                Some(d) => vec![(*d).into()],
                None => Duality::ALL.to_vec(),
            };
            for &kp in &cfg.grid {
                for &d in &maps {
                    let mut m = base(kp);
                    m.insert("duality".into(), json!(format!("{d:?}")));
                    m.insert("permutation".into(), json!(d.permutation()));
                    match d.transform_kappa(kp).and_then(|t| Ok((t, d.images(kp)?))) {
                        Ok((t, images)) => {
                            m.insert("k1_dual".into(), json!(t.k1));
                            m.insert("k2_dual".into(), json!(t.k2));
                            for g in Generator::ALL {
                                let img = images[g.index()].to_array();
                                for h in Generator::ALL {
                                    m.insert(format!("{}_{}", gen_key(g), gen_key(h)), json!(img[h.index()]));
                                }
                            }
                        }
                        Err(e) => {
                            m.insert("error".into(), json!(e.to_string()));
                        }
                    }
                    out.rows.push(Value::Object(m));
                }
            }
            out.checks = suite_checks("duality", cfg);
        }
        Command::Bialgebra { kind } => {
            let dk: DeformationKind = (*kind).into();
            let mut cyc = Tally::new("bialgebra-cocycle");
            let mut dj = Tally::new("bialgebra-dual-jacobi");
            for &kp in &cfg.grid {
                for &z in &cfg.z_values {
                    let delta = cocommutator_map(kp, &rmatrix(dk, z));
                    let rep = bialgebra_check(kp, &delta);
                    cyc.push(rep.cocycle_defect);
                    dj.push(rep.dual_jacobi_defect);
                    let mut m = base(kp);
                    m.insert("z".into(), json!(z));
                    m.insert("kind".into(), json!(kind_name(*kind)));
                    for g in Generator::ALL {
                        insert_bivector(&mut m, &format!("delta_{}", gen_key(g)), &delta.image(g));
                    }
                    m.insert("cocycle_defect".into(), json!(rep.cocycle_defect));
                    m.insert("dual_jacobi_defect".into(), json!(rep.dual_jacobi_defect));
                    for (label, h) in [("h0", Generator::J12), ("h01", Generator::J01), ("h02", Generator::J02)] {
                        let v = match coisotropy_check(kp, &delta, &[h]) {
                            Ok(c) => format!("{c:?}"),
                            Err(e) => e.to_string(),
                        };
                        m.insert(format!("coisotropy_{label}"), json!(v));
                    }
                    out.rows.push(Value::Object(m));
                }
            }
            match dk {
                DeformationKind::FirstKind => out.checks = suite_checks("bialgebra", cfg),
                DeformationKind::SecondKind => {
                    out.checks.push(cyc.finish(cfg));
                    out.checks.push(dj.finish(cfg));
                }
            }
        }
        Command::Ybe { kind } => {
            let dk: DeformationKind = (*kind).into();
            let mut sch = Tally::new("bialgebra-schouten-oracle");
            let mut ybe = Tally::new("bialgebra-mcybe");
            for &kp in &cfg.grid {
                for &z in &cfg.z_values {
                    let r = rmatrix(dk, z);
                    let t = schouten(kp, &r).t;
                    let d = mcybe_defect(kp, &r);
                    let (a, b) = (schouten_tensor(kp, &r), schouten_brute_force(kp, &r));
                    let mut diff = 0.0_f64;
                    for i in 0..3 {
                        for j in 0..3 {
                            for k in 0..3 {
                                diff = diff.max((a[i][j][k] - b[i][j][k]).abs());
                            }
                        }
                    }
                    sch.push(diff);
                    ybe.push(d);
                    let mut m = base(kp);
                    m.insert("z".into(), json!(z));
                    m.insert("kind".into(), json!(kind_name(*kind)));
                    insert_bivector(&mut m, "r", &r);
                    m.insert("schouten".into(), json!(t));
                    m.insert("mcybe_defect".into(), json!(d));
                    out.rows.push(Value::Object(m));
                }
            }
            out.checks.push(sch.finish(cfg));
            out.checks.push(ybe.finish(cfg));
        }
        Command::Sklyanin { a1, a2, xi } => {
            let gc = GroupCoordinates::new(*a1, *a2, *xi);
            let pairs = [(Coord::Xi, Coord::A1, "xi_a1"), (Coord::Xi, Coord::A2, "xi_a2"), (Coord::A1, Coord::A2, "a1_a2")];
            let mut orc = Tally::new("sklyanin-oracle");
            for &kp in &cfg.grid {
                for &z in &cfg.z_values {
                    let mut m = base(kp);
                    m.insert("z".into(), json!(z));
                    m.insert("a1".into(), json!(a1));
                    m.insert("a2".into(), json!(a2));
                    m.insert("xi".into(), json!(xi));
                    let numeric = sklyanin_matrix(kp, &rmatrix(DeformationKind::FirstKind, z), gc, FieldMode::Numeric);
                    let closed: ck_core::Result<Vec<f64>> =
                        pairs.iter().map(|&(f, g, _)| sklyanin_closed(kp, z, f, g, gc)).collect();
                    match (closed, numeric) {
                        (Ok(c), Ok(n)) => {
                            let mut d = 0.0_f64;
                            for (k, &(f, g, key)) in pairs.iter().enumerate() {
                                let nv = n[f.index()][g.index()];
                                m.insert(key.into(), json!(c[k]));
                                m.insert(format!("{key}_numeric"), json!(nv));
                                d = d.max((c[k] - nv).abs());
                            }
                            orc.push(d);
                        }
                        (Err(e), _) | (_, Err(e)) => {
                            m.insert("error".into(), json!(e.to_string()));
                        }
                    }
                    out.rows.push(Value::Object(m));
                }
            }
            out.checks.push(orc.finish(cfg));
        }
        Command::Phs { kind, a1, a2 } => {
            let dk: DeformationKind = (*kind).into();
            let mut orc = Tally::new("sklyanin-oracle");
            for &kp in &cfg.grid {
                for &z in &cfg.z_values {
                    let mut m = base(kp);
                    m.insert("z".into(), json!(z));
                    m.insert("kind".into(), json!(kind_name(*kind)));
                    m.insert("a1".into(), json!(a1));
                    m.insert("a2".into(), json!(a2));
                    match phs_points_bracket(kp, z, dk, *a1, *a2) {
                        Ok(v) => {
                            m.insert("a1_a2".into(), json!(v));
                            // {a1, a2} on the group does not depend on ξ
                            let gc = GroupCoordinates::new(*a1, *a2, 0.0);
                            if let Ok(p) = sklyanin_matrix(kp, &rmatrix(dk, z), gc, FieldMode::Numeric) {
                                let nv = p[Coord::A1.index()][Coord::A2.index()];
                                m.insert("a1_a2_numeric".into(), json!(nv));
                                orc.push((v - nv).abs());
                            }
                        }
                        Err(e) => {
                            m.insert("error".into(), json!(e.to_string()));
                        }
                    }
                    out.rows.push(Value::Object(m));
                }
            }
            out.checks.push(orc.finish(cfg));
        }
        Command::Coproduct { generator } => {
            for &kp in &cfg.grid {
                for &z in &cfg.z_values {
                    let mut m = base(kp);
                    m.insert("z".into(), json!(z));
                    let rels = ["j12_j01", "j12_j02", "j01_j02"];
                    match deformed_relation_defects(kp, z) {
                        Ok(d) => {
                            for (k, key) in rels.iter().enumerate() {
                                m.insert(format!("relation_{key}"), json!(d[k]));
                            }
                        }
                        Err(e) => {
                            m.insert("relation_error".into(), json!(e.to_string()));
                        }
                    }
                    if let Ok(d) = deformed_relation_defects_in(kp, z, FactorRep::Vector) {
                        m.insert("vector_rep_relation".into(), json!(d.iter().copied().fold(0.0, f64::max)));
                    }
                    if let Ok(d) = single_copy_defect(kp, z) {
                        m.insert("single_copy_relation".into(), json!(d));
                    }
                    match coassociativity_defect(kp, z) {
                        Ok(d) => m.insert("coassociativity".into(), json!(d)),
                        Err(e) => m.insert("coassociativity_error".into(), json!(e.to_string())),
                    };
                    if let Some(g) = generator {
                        let g: Generator = (*g).into();
                        let c = coproduct_rep(kp, z, g);
                        let rows: Vec<Vec<f64>> = (0..9).map(|i| (0..9).map(|j| c[(i, j)]).collect()).collect();
                        m.insert("generator".into(), json!(g.to_string()));
                        m.insert("coproduct".into(), json!(rows));
                    }
                    out.rows.push(Value::Object(m));
                }
            }
            out.checks = suite_checks("quantum", cfg);
        }
        Command::SweepAll => {
            let suites = run_all(cfg);
            for s in &suites {
                for c in &s.checks {
                    out.rows.push(json!({
                        "suite": s.suite,
                        "check": c.name,
                        "max_defect": c.max_defect,
                        "tolerance": c.tolerance,
                        "samples": c.samples,
                        "passed": c.passed,
                        "errors": c.errors.join("; "),
                    }));
                }
                out.checks.extend(s.checks.iter().cloned());
            }
            out.suites = Some(suites);
        }
        Command::ExportGeodesics { chart, lines, extent, n } => {
            let [kp] = cfg.grid[..] else {
                return Err(ConfigError::Invalid("export-geodesics needs exactly one --k1/--k2 pair".into()));
            };
            let chart: Chart = (*chart).into();
            if chart == Chart::Ambient {
                return Err(ConfigError::Invalid("export-geodesics needs a two-dimensional chart".into()));
            }
            let spec = FamilySpec { lines: *lines, extent: *extent };
            let rows = export_geodesics(kp, chart, spec, *n).map_err(|e| ConfigError::Invalid(e.to_string()))?;
            for r in rows {
                out.rows.push(json!({
                    "family_id": r.family_id,
                    "t": r.t,
                    "beltrami1": r.beltrami1,
                    "beltrami2": r.beltrami2,
                    "status": r.status,
                }));
            }
        }
    }
    Ok(out)
}

fn kind_name(k: KindArg) -> &'static str {
    match k {
        KindArg::First => "first",
        KindArg::Second => "second",
    }
}

fn insert_bivector(m: &mut Map<String, Value>, prefix: &str, b: &Bivector) {
    for (k, &p) in PAIRS.iter().enumerate() {
        m.insert(format!("{prefix}_{}", pair_key(p)), json!(b.b[k]));
    }
}
