//! One driver per subcommand, each assembling core checks into a
//! [`SuiteReport`].

use std::collections::BTreeMap;

use minrep_core::bilocal::{canonical_form_check, commutant_type, frobenius_property_check, verify_commutator_formula, DivisionAlgebra, TAlgebra};
use minrep_core::field::{Qi, Q};
use minrep_core::fockspace::{
    basis_size, helicity_spectrum, joint_weight_decomposition, nilpotent_cone_matrix_check, operator_matrix, truncated_closure_check, SparseOperator,
    TruncatedFock,
};
use minrep_core::harmonics::{build_harmonic, compactify_identity_holds, harmonic_space_dim, mode_count, operator_algebra_check, verify_mode};
use minrep_core::linalg::{span_rank, Matrix};
use minrep_core::massless::{lightlike_identity, realize_schrodinger, vacuum_checks};
use minrep_core::oscrep::{
    casimir_defect, charge, check_dual_pair, nilpotent_cone_check, relations_report, so_star_full, so_star_generators, sp2_generator_set, sp2_named,
    su22_generators, unn_basis, unn_generators, GeneratorSet,
};
use minrep_core::report::Report;
use minrep_core::rootsys::{table1_report, Table1Config};
use minrep_core::weylalg::{a, b, cre, pair, ModeId, WeylElement};
use serde_json::json;

use crate::config::{AlgebraName, CommandKind, FamilyName, RunConfig};
use crate::report::{SuiteReport, Table1Line};
use crate::trials::{random_matrix, random_point, trial_rng};
use crate::RunError;

/// Validates `cfg`, runs its command and returns the finalized report.
pub fn run(cfg: &RunConfig) -> Result<SuiteReport, RunError> {
    let cmd = cfg.validate()?;
    let mut s = SuiteReport::new(cmd.name());
    match cmd {
        CommandKind::Table1 => table1(cfg, &mut s)?,
        CommandKind::CheckRelations => relations(cfg, &mut s)?,
        CommandKind::CheckDualPair => dual_pair(cfg, &mut s)?,
        CommandKind::CheckBilocal => bilocal(cfg, &mut s)?,
        CommandKind::Decompose => decompose(cfg, &mut s)?,
        CommandKind::Harmonics => harmonics(cfg, &mut s)?,
        CommandKind::Massless => massless(cfg, &mut s)?,
        CommandKind::Closure => closure(cfg, &mut s)?,
    }
    s.finalize(cfg.stable);
    Ok(s)
}

fn ok(r: Report) -> Result<Report, RunError> {
    Ok(r)
}

fn check_cap(what: &str, modes: usize, cutoff: u32, cap: u64) -> Result<(), RunError> {
    let size = basis_size(modes, cutoff);
    if size > cap as u128 {
        return Err(RunError::Usage(format!("{}: {} states over {} modes at cutoff {} exceeds the cap of {}", what, size, modes, cutoff, cap)));
    }
    Ok(())
}

fn table1(cfg: &RunConfig, s: &mut SuiteReport) -> Result<(), RunError> {
    let r = |x: crate::config::RankRange| x.0..=x.1;
    let tc = Table1Config { a: r(cfg.a_range), b: r(cfg.b_range), c: r(cfg.c_range), d: r(cfg.d_range) };
    let mut lines = Vec::new();
    let mut rows = Vec::new();
    s.timed(|| {
        rows = table1_report(&tc).map_err(RunError::internal)?;
        let mut rep = Report::new("table1");
        for row in &rows {
            let m = &row.report;
            let id = &m.algebra_label;
            rep.record_bool(format!("{} closed form", id), "dimension table", row.matches_closed_form(), || {
                format!(
                    "computed ({}, {}, {}, {}), expected ({}, {}, {}, {})",
                    m.dim_g,
                    m.centralizer_label,
                    m.dim_g1,
                    m.gk_dim,
                    row.expected.dim_g,
                    row.expected.centralizer,
                    row.expected.dim_g1,
                    row.expected.gk_dim
                )
            });
            rep.record_bool(format!("{} orbit dimension", id), "dim O_min = 2 gk_dim", m.min_orbit_dim == 2 * m.gk_dim, || {
                format!("dim O_min = {}, gk_dim = {}", m.min_orbit_dim, m.gk_dim)
            });
            rep.record_bool(format!("{} dimension identity", id), "|g| = |h| + 2|g1| + 3", row.dimension_identity_ok(), || {
                format!("{} != {} + 2*{} + 3", m.dim_g, m.dim_h, m.dim_g1)
            });
        }
        ok(rep)
    })?;
    for row in &rows {
        let m = &row.report;
        lines.push(Table1Line {
            label: m.algebra_label.clone(),
            dim_g: m.dim_g,
            h_label: m.centralizer_label.clone(),
            dim_g1: m.dim_g1,
            gk_dim: m.gk_dim,
            eq27_ok: row.dimension_identity_ok(),
        });
    }
    s.table1 = Some(lines);
    Ok(())
}

fn relation_gens(cfg: &RunConfig) -> Result<GeneratorSet, RunError> {
    match cfg.algebra {
        AlgebraName::Su22 => Ok(su22_generators()),
        AlgebraName::Unn => unn_generators(cfg.n).map_err(RunError::internal),
        AlgebraName::SoStar => so_star_generators(cfg.n).map_err(RunError::internal),
    }
}

fn relations(cfg: &RunConfig, s: &mut SuiteReport) -> Result<(), RunError> {
    let gens = relation_gens(cfg)?;
    s.timed(|| ok(relations_report(&gens)))?;
    if cfg.algebra == AlgebraName::SoStar && cfg.n == 2 {
        s.timed(|| ok(nilpotent_cone_check()))?;
        check_cap("nilpotent-cone matrix check", 8, cfg.cutoff, cfg.cap)?;
        s.timed(|| nilpotent_cone_matrix_check(cfg.cutoff).map_err(RunError::internal))?;
    }
    if cfg.casimir {
        if cfg.algebra != AlgebraName::SoStar {
            return Err(RunError::Usage("--casimir requires --algebra so-star".into()));
        }
        let out = casimir_defect(cfg.n).map_err(RunError::internal)?;
        s.add(&out.report);
        s.detail("casimir.lambda", out.lambda.as_ref().map(|l| l.to_string()));
        if let Some(([lam, mu, kappa], c)) = &out.fitted {
            s.detail(
                "casimir.fitted",
                json!({"lambda": lam.to_string(), "mu": mu.to_string(), "kappa": kappa.to_string(), "constant": c.to_string()}),
            );
        }
        if out.lambda.is_none() {
            s.detail("casimir.residual", "literal defect is not central: see [D,non-compact]");
        }
    }
    Ok(())
}

fn dual_pair(cfg: &RunConfig, s: &mut SuiteReport) -> Result<(), RunError> {
    let n = cfg.n;
    let gens = so_star_generators(n).map_err(RunError::internal)?;
    let so = so_star_full(&gens);
    let sp2 = sp2_named(n);
    s.timed(|| {
        let mut r = check_dual_pair(&so, &sp2);
        r.title = format!("so*({}) x sp(2)", 4 * n);
        ok(r)
    })?;
    let u22 = unn_basis(2);
    let h = vec![("h".to_string(), charge(2))];
    s.timed(|| {
        let mut r = check_dual_pair(&u22, &h);
        r.title = "u(2,2) x h".into();
        r.record_bool("generator count", "u(2,2) basis", u22.len() == 16, || format!("{} generators", u22.len()));
        ok(r)
    })?;
    s.timed(|| {
        let mut r = Report::new("dual-pair controls");
        let bad = |left: &[(String, WeylElement)], right: &[(String, WeylElement)]| {
            let rep = check_dual_pair(left, right);
            let nonzero: Vec<String> = rep.failures().map(|c| c.id.clone()).collect();
            if nonzero.is_empty() {
                None
            } else {
                Some(nonzero.join(", "))
            }
        };
        let number_a1 = vec![("a1*a1".to_string(), pair(cre(a(1)), minrep_core::weylalg::ann(a(1))))];
        r.record_negative("sp(2) vs a1*a1", "dual pair", bad(&number_a1, &sp2));
        let aa = vec![("a1*a2*".to_string(), pair(cre(a(1)), cre(a(2))))];
        r.record_negative("h vs a1*a2*", "dual pair", bad(&aa, &h));
        let bb = vec![("a1*b1".to_string(), pair(cre(a(1)), minrep_core::weylalg::ann(b(1))))];
        r.record_negative("so* vs a1*b1", "dual pair", bad(&so, &bb));
        ok(r)
    })?;
    Ok(())
}

fn identity(l: usize) -> Matrix<Q> {
    Matrix::identity(l)
}

fn bilocal(cfg: &RunConfig, s: &mut SuiteReport) -> Result<(), RunError> {
    let l = cfg.l;
    s.timed(|| {
        let mut r = verify_commutator_formula(&identity(l), &identity(l)).map_err(RunError::internal)?;
        r.title = format!("bilocal identity L={}", l);
        ok(r)
    })?;
    for t in 0..cfg.trials as u64 {
        let mut rng = trial_rng(cfg.seed, t);
        let (m, mp) = (random_matrix(&mut rng, l), random_matrix(&mut rng, l));
        s.timed(|| {
            let mut r = verify_commutator_formula(&m, &mp).map_err(RunError::internal)?;
            r.title = format!("bilocal L={} trial {:04}", l, t);
            ok(r)
        })?;
        let m3 = random_matrix(&mut rng, l);
        s.timed(|| {
            let mut r = frobenius_property_check(&m, &mp, &m3).map_err(RunError::internal)?;
            r.title = format!("frobenius L={} trial {:04}", l, t);
            ok(r)
        })?;
    }
    s.timed(|| ok(classifier_report()))?;
    for (f, n) in [(DivisionAlgebra::R, 2), (DivisionAlgebra::C, 2), (DivisionAlgebra::H, 1)] {
        s.timed(|| ok(canonical_form_check(f, n)))?;
    }
    s.detail("seed", cfg.seed);
    s.detail("rng", "ChaCha8Rng, trial t seeded with seed + t");
    Ok(())
}

/// The three irreducible t-algebras with commutants R, C and H.
pub fn canonical_t_algebras() -> Vec<(DivisionAlgebra, TAlgebra)> {
    let full = TAlgebra::generated_by(&[Matrix::unit(2, 0, 1)]).expect("t-algebra");
    let cx = TAlgebra::new(DivisionAlgebra::C.left_regular()).expect("t-algebra");
    let hx = TAlgebra::new(DivisionAlgebra::H.left_regular()).expect("t-algebra");
    vec![(DivisionAlgebra::R, full), (DivisionAlgebra::C, cx), (DivisionAlgebra::H, hx)]
}

pub fn classifier_report() -> Report {
    let mut r = Report::new("commutant classifier");
    for (expected, alg) in canonical_t_algebras() {
        let got = commutant_type(&alg);
        let holds = matches!(&got, Ok((t, basis)) if *t == expected && basis.len() == expected.dim());
        r.record_bool(format!("{}", expected), "commutant type", holds, || match &got {
            Ok((t, basis)) => format!("{} with commutant dimension {}", t, basis.len()),
            Err(e) => e.to_string(),
        });
    }
    let diag = TAlgebra::new(vec![Matrix::identity(2), Matrix::unit(2, 0, 0)]).expect("t-algebra");
    r.record_negative("diagonal algebra", "commutant type", commutant_type(&diag).err().map(|e| e.to_string()));
    r
}

fn so_star_modes(n: u16) -> Vec<ModeId> {
    (1..=2 * n).map(ModeId::A).chain((1..=2 * n).map(ModeId::B)).collect()
}

fn is_zero_vec(v: &[Qi]) -> bool {
    v.iter().all(|x| *x == Qi::int(0))
}

fn decompose(cfg: &RunConfig, s: &mut SuiteReport) -> Result<(), RunError> {
    let n = cfg.n;
    let modes = so_star_modes(n);
    check_cap("decompose", modes.len(), cfg.level, cfg.cap)?;
    let fock = TruncatedFock::with_cap(modes, cfg.level, cfg.cap as u128).map_err(|e| RunError::Usage(e.to_string()))?;
    let g = so_star_generators(n).map_err(RunError::internal)?;
    let gauge = sp2_generator_set(n);
    let mut table = None;
    s.timed(|| {
        let t = joint_weight_decomposition(&g, &gauge, &fock, cfg.level).map_err(RunError::internal)?;
        let mut r = Report::new(format!("so*({}) decomposition", 4 * n));
        r.record_bool("bookkeeping", "lowest-weight dimension = sum of multiplicity x gauge dimension", t.bookkeeping_holds(), || {
            format!("{:?}", t.lowest_weight_dims)
        });
        r.record_bool("one-to-one", "each lowest weight pairs with one gauge irrep", t.one_to_one(), || format!("{:?}", t.rows));
        for level in 0..=cfg.level {
            let rows: Vec<_> = t.rows_at(level).collect();
            let want = level as usize + 1;
            let holds = rows.len() == 1 && rows[0].gauge_dim == want && rows[0].multiplicity == 1;
            r.record_bool(format!("level {} isospin", level), "isospin pattern", holds, || format!("{:?}", rows));
        }
        table = Some(t);
        ok(r)
    })?;
    let t = table.expect("decomposition ran");
    let rows: Vec<_> = t
        .rows
        .iter()
        .map(
            |r| json!({"level": r.level, "weight": r.weight, "gauge_label": r.gauge_label, "gauge_dim": r.gauge_dim, "multiplicity": r.multiplicity}),
        )
        .collect();
    s.detail("rows", rows);
    s.detail("lowest_weight_dims", t.lowest_weight_dims.iter().map(|(k, v)| (k.to_string(), *v)).collect::<BTreeMap<_, _>>());
    s.timed(|| low_levels(n, &g, &fock))?;
    Ok(())
}

/// Vacuum singlet, level-one doublets and the level-two isotriplet.
fn low_levels(n: u16, g: &GeneratorSet, fock: &TruncatedFock) -> Result<Report, RunError> {
    let mat = |w: &WeylElement| operator_matrix(w, fock).map_err(RunError::internal);
    let f_ops: Vec<SparseOperator> = g.f.iter().map(mat).collect::<Result<_, _>>()?;
    let [e, f, q] = minrep_core::oscrep::sp2_triple(n);
    let (e, f, q) = (mat(&e)?, mat(&f)?, mat(&q)?);
    let vec_of = |occ: &[(ModeId, u32)]| fock.state_of(occ).map(|i| fock.basis_vector(i));
    let lowered_by_all = |v: &[Qi]| f_ops.iter().all(|op| is_zero_vec(&op.apply(v)));
    let mut r = Report::new(format!("so*({}) low levels", 4 * n));

    let vac = vec_of(&[]).expect("vacuum");
    r.record_bool("vacuum lowest weight", "F_i|0> = 0", lowered_by_all(&vac), || "some F_i acts".into());
    let singlet = [&e, &f, &q].iter().all(|op| is_zero_vec(&op.apply(&vac)));
    r.record_bool("vacuum singlet", "sp(2) singlet vacuum", singlet, || "gauge generator acts".into());

    if fock.cutoff() >= 1 {
        let mut doublet = true;
        for j in 1..=2 * n {
            let (bj, aj) = (vec_of(&[(b(j), 1)]).expect("state"), vec_of(&[(a(j), 1)]).expect("state"));
            doublet &= e.apply(&bj) == aj && is_zero_vec(&e.apply(&aj)) && f.apply(&aj) == bj;
        }
        r.record_bool("E b_j*|0> = a_j*|0>", "isospin doublet", doublet, || "doublet relation fails".into());
        let top = 2 * n;
        let (at, bt) = (vec_of(&[(a(top), 1)]).expect("state"), vec_of(&[(b(top), 1)]).expect("state"));
        r.record_bool("level-one lowest weight", "F_i a_2n*|0> = F_i b_2n*|0> = 0", lowered_by_all(&at) && lowered_by_all(&bt), || {
            "some F_i acts".into()
        });
    }
    if fock.cutoff() >= 2 {
        let top = 2 * n;
        let trip: Vec<Vec<Qi>> =
            [vec![(a(top), 2)], vec![(a(top), 1), (b(top), 1)], vec![(b(top), 2)]].iter().map(|occ| vec_of(occ).expect("state")).collect();
        let lw = trip.iter().all(|v| lowered_by_all(v));
        r.record_bool("isotriplet lowest weight", "F_i annihilates the isotriplet", lw, || "some F_i acts".into());
        let mut closed = span_rank(&trip) == 3;
        for op in [&e, &f, &q] {
            for v in &trip {
                let mut ext = trip.clone();
                ext.push(op.apply(v));
                closed &= span_rank(&ext) == 3;
            }
        }
        // E raises b*^2 -> a*b* -> a*^2 -> 0
        let chain = !is_zero_vec(&e.apply(&trip[2])) && !is_zero_vec(&e.apply(&trip[1])) && is_zero_vec(&e.apply(&trip[0]));
        r.record_bool("isotriplet", "(a*^2, a*b*, b*^2)|0> is an sp(2) triplet", closed && chain, || "not an irreducible triplet".into());
    }
    Ok(r)
}

fn harmonics(cfg: &RunConfig, s: &mut SuiteReport) -> Result<(), RunError> {
    for n in 1..=cfg.nmax {
        s.timed(|| {
            let mut r = Report::new(format!("harmonics n={}", n));
            for l in 0..n {
                for m in -(l as i32)..=(l as i32) {
                    let h = build_harmonic(n, l, m).map_err(RunError::internal)?;
                    for c in verify_mode(&h.poly, n, l, m).checks {
                        r.checks.push(minrep_core::report::Check { id: format!("({},{},{}) {}", n, l, m, c.id), ..c });
                    }
                }
            }
            let want = (n * n) as usize;
            let count = mode_count(n);
            r.record_bool("independent modes", "n^2 modes at level n", count == want, || format!("{} modes", count));
            let kernel = harmonic_space_dim(n - 1);
            r.record_bool("harmonic space", "kernel of the Laplacian has dimension n^2", kernel == want, || format!("dimension {}", kernel));
            ok(r)
        })?;
    }
    s.timed(|| ok(operator_algebra_check(cfg.nmax.saturating_sub(1).min(4))))?;
    s.timed(|| {
        let mut r = Report::new("compactification");
        for t in 0..cfg.points as u64 {
            let x = random_point(&mut trial_rng(cfg.seed, t));
            let holds = compactify_identity_holds(&x).map_err(RunError::internal)?;
            r.record_bool(format!("point {:03}", t), "sum z^2 = conj(omega)/omega", holds, || {
                format!("x = ({}, {}, {}, {})", x[0], x[1], x[2], x[3])
            });
        }
        ok(r)
    })?;
    s.detail("seed", cfg.seed);
    Ok(())
}

/// Number of `(a1, a2, b1, b2)` occupations of total `level` per value of
/// `h = n_a - n_b`: `p` quanta on two `a` modes and `q` on two `b` modes
/// give `(p + 1)(q + 1)` states.
pub fn helicity_oracle(level: u32) -> BTreeMap<i64, usize> {
    (0..=level).map(|p| (p as i64 - (level - p) as i64, (p as usize + 1) * ((level - p) as usize + 1))).collect()
}

fn massless(cfg: &RunConfig, s: &mut SuiteReport) -> Result<(), RunError> {
    let real = realize_schrodinger(cfg.degree);
    s.timed(|| ok(real.ccr_report()))?;
    s.timed(|| ok(realize_schrodinger(cfg.degree.min(4)).functoriality_report()))?;
    s.timed(|| ok(vacuum_checks()))?;
    s.timed(|| ok(lightlike_identity()))?;
    let mut spectra = BTreeMap::new();
    s.timed(|| {
        let mut r = Report::new("helicity spectrum");
        for level in 0..=cfg.helicity_max {
            let got = helicity_spectrum(level).map_err(RunError::internal)?;
            let want = helicity_oracle(level);
            r.record_bool(format!("level {}", level), "helicity histogram", got == want, || format!("got {:?}, expected {:?}", got, want));
            spectra.insert(level.to_string(), got.iter().map(|(k, v)| (k.to_string(), *v)).collect::<BTreeMap<_, _>>());
        }
        ok(r)
    })?;
    s.detail("helicity", spectra);
    Ok(())
}

fn closure(cfg: &RunConfig, s: &mut SuiteReport) -> Result<(), RunError> {
    let families = match cfg.family {
        FamilyName::R => vec![DivisionAlgebra::R],
        FamilyName::C => vec![DivisionAlgebra::C],
        FamilyName::H => vec![DivisionAlgebra::H],
        FamilyName::All => vec![DivisionAlgebra::R, DivisionAlgebra::C, DivisionAlgebra::H],
    };
    let mut charges = BTreeMap::new();
    for f in families {
        let modes = cfg.modes as usize * cfg.flavors as usize * f.dim();
        check_cap("closure", modes, cfg.closure_level, cfg.cap)?;
        s.timed(|| {
            let o = truncated_closure_check(f, cfg.modes, cfg.flavors, cfg.closure_level);
            let mut r = o.report;
            let want = Q::from_integer(cfg.flavors.into());
            r.record_bool("central charge", "central charge equals the number of flavors", o.central_charge.as_ref() == Some(&want), || {
                format!("{:?}", o.central_charge.as_ref().map(|c| c.to_string()))
            });
            r.record_bool("gauge dimension", "gauge group U(N,F)", o.gauge_dim == f.gauge_dim(cfg.flavors as usize), || format!("{}", o.gauge_dim));
            charges.insert(f.label().to_string(), o.central_charge.map(|c| c.to_string()));
            ok(r)
        })?;
    }
    s.detail("central_charge", charges);
    Ok(())
}
