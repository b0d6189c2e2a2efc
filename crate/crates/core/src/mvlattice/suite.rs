use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{
    lattice_to_mv, mv_to_lattice, num_free, perp, perp_lattice, Lattice, MVMatrix, PolyMatrix,
    QPoly,
};
use crate::report::{Case, Report};
use crate::weights::Weight;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MvConfig {
    pub m_max: usize,
    pub mu_max: usize,
    pub samples: usize,
    pub perp_samples: usize,
    pub seed: u64,
}

impl Default for MvConfig {
    fn default() -> Self {
        Self {
            m_max: 3,
            mu_max: 5,
            samples: 20,
            perp_samples: 10,
            seed: 1729,
        }
    }
}

fn mu_label(mu: &[usize]) -> String {
    Weight::new(mu.iter().map(|&x| x as i64).collect::<Vec<_>>()).to_string()
}

/// Independent stream per job index so results do not depend on scheduling.
fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn sample_case(mu: &[usize], s: usize, rng: &mut ChaCha8Rng) -> Case {
    let name = format!("chart/mu={}/sample={s}", mu_label(mu));
    let a = MVMatrix::random(mu.to_vec(), rng);
    let l = mv_to_lattice(&a);
    let k: usize = mu.iter().sum();
    let mut bad = Vec::new();
    match lattice_to_mv(mu, &l) {
        Ok(b) if b == a => {}
        Ok(_) => bad.push("round trip changed the matrix".to_string()),
        Err(e) => bad.push(format!("round trip: {e}")),
    }
    let (ch, cp) = (l.ch(), a.entries().charpoly());
    if ch != cp {
        bad.push(format!(
            "ch = {} but charpoly = {}",
            ch.display_in("x"),
            cp.display_in("x")
        ));
    }
    let (c, d) = (l.codim(), l.det_degree());
    if c != k || d != k {
        bad.push(format!("codim {c}, deg det {d}, expected {k}"));
    }
    let mut last = 0;
    for p in 0..=k + 1 {
        let w = l.dim_intersection_w(p);
        if w < last || (w as i64) < (mu.len() * p) as i64 - k as i64 {
            bad.push(format!("dim L∩W_{p} = {w} breaks the bounds"));
        }
        last = w;
    }
    if bad.is_empty() {
        Case::pass(name, format!("A = {}", a.to_json()))
    } else {
        Case::fail(name, format!("A = {}: {}", a.to_json(), bad.join("; ")))
    }
}

fn random_poly(rng: &mut ChaCha8Rng) -> QPoly {
    let deg = rng.gen_range(0..=2);
    QPoly::from_coeffs(
        (0..=deg)
            .map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(-2i64..=2))))
            .collect(),
    )
}

/// Nonsingular generators with entries of degree at most 2.
pub(crate) fn random_lattice(m: usize, rng: &mut ChaCha8Rng) -> Lattice {
    loop {
        let rows = (0..m)
            .map(|_| (0..m).map(|_| random_poly(rng)).collect())
            .collect();
        if let Ok(l) = Lattice::new(PolyMatrix::from_rows(rows)) {
            return l;
        }
    }
}

fn perp_case(m: usize, s: usize, rng: &mut ChaCha8Rng) -> Case {
    let name = format!("perp/m={m}/sample={s}");
    let l = random_lattice(m, rng);
    let lp = match perp_lattice(&l) {
        Ok(x) => x,
        Err(e) => return Case::fail(name, format!("L = {}: {e}", l.to_json())),
    };
    let back = perp(&lp).ok().and_then(|x| x.as_lattice());
    Case::check(
        name,
        lp.contains_l0() && back.as_ref() == Some(&l),
        format!("L = {}", l.to_json()),
    )
}

/// Chart round trips, `ch`, codimension, free counts and `perp` on seeded
/// random inputs. Compositions may have zero parts.
pub fn check_mv(cfg: &MvConfig) -> Report {
    let mut report = Report::new(
        "mv",
        serde_json::json!({
            "m_max": cfg.m_max,
            "mu_max": cfg.mu_max,
            "samples": cfg.samples,
            "perp_samples": cfg.perp_samples,
            "seed": cfg.seed,
        }),
    );
    let mut mus = Vec::new();
    for m in 1..=cfg.m_max {
        for k in 0..=cfg.mu_max {
            mus.extend(
                Weight::compositions(m, k as u32)
                    .into_iter()
                    .map(|w| w.entries().iter().map(|&x| x as usize).collect::<Vec<_>>()),
            );
        }
    }
    for mu in &mus {
        let expected: usize = mu
            .iter()
            .flat_map(|a| mu.iter().map(move |b| a.min(b)))
            .sum();
        let got = MVMatrix::from_free(
            mu.clone(),
            vec![BigRational::from_integer(0.into()); num_free(mu)],
        )
        .map(|a| a.free_coordinates().len());
        report.push(Case::check(
            format!("free-count/mu={}", mu_label(mu)),
            got == Ok(expected),
            format!("{expected}"),
        ));
    }
    let jobs: Vec<(usize, usize)> = (0..mus.len())
        .flat_map(|i| (0..cfg.samples).map(move |s| (i, s)))
        .collect();
    let cases: Vec<Case> = jobs
        .par_iter()
        .enumerate()
        .map(|(idx, &(i, s))| sample_case(&mus[i], s, &mut stream_rng(cfg.seed, idx as u64)))
        .collect();
    report.extend(cases);
    let offset = jobs.len() as u64;
    let perp_jobs: Vec<(usize, usize)> = (1..=cfg.m_max)
        .flat_map(|m| (0..cfg.perp_samples).map(move |s| (m, s)))
        .collect();
    let cases: Vec<Case> = perp_jobs
        .par_iter()
        .enumerate()
        .map(|(idx, &(m, s))| perp_case(m, s, &mut stream_rng(cfg.seed, offset + idx as u64)))
        .collect();
    report.extend(cases);
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes_and_is_deterministic() {
        let cfg = MvConfig {
            m_max: 2,
            mu_max: 3,
            samples: 3,
            perp_samples: 3,
            seed: 7,
        };
        let r = check_mv(&cfg);
        assert!(r.all_passed(), "{:?}", r.failed_cases().collect::<Vec<_>>());
        assert_eq!(r, check_mv(&cfg));
    }
}
