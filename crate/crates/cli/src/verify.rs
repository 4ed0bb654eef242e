use eqcob_core::algebra::{Series, SeriesSpace};
use eqcob_core::equivariant::{
    gln_coefficients, mu_n_coefficients, partitions_bounded, restrict_gln_to_torus,
    sample_degree_one, torus_coefficients, torus_limit, whitney_check, Theory,
};
use eqcob_core::fgl::{FormalGroupLaw, NSeries};
use eqcob_core::presentations::{
    flag_ring, graded_piece_snf, grassmannian_ring, total_rank, Stabilization,
};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::outcome::Outcome;

#[derive(Serialize)]
struct Check {
    check: String,
    passed: bool,
    detail: String,
}

/// Runs named checks; an error inside a check counts as a failure.
#[derive(Default)]
struct Suite {
    checks: Vec<Check>,
    notes: Vec<String>,
}

impl Suite {
    fn run(&mut self, name: impl Into<String>, f: impl FnOnce() -> anyhow::Result<(bool, String)>) {
        let (passed, detail) = f().unwrap_or_else(|e| (false, format!("error: {e:#}")));
        self.checks.push(Check {
            check: name.into(),
            passed,
            detail,
        });
    }

    fn finish(self) -> anyhow::Result<Outcome> {
        let passed = self.checks.iter().all(|c| c.passed);
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        let mut out =
            Outcome::new(serde_json::json!({ "passed": passed, "checks": &self.checks }))?;
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                out.line(format!("{status} {}", c.check));
            } else {
                out.line(format!("{status} {}: {}", c.check, c.detail));
            }
        }
        out.line(format!("{} checks, {failed} failed", self.checks.len()));
        out.diagnostics = self.notes;
        out.passed = passed;
        Ok(out)
    }
}

fn verdict(ok: bool, detail: impl Into<String>) -> anyhow::Result<(bool, String)> {
    Ok((ok, detail.into()))
}

pub fn fgl(theories: &[Theory], d: u32) -> anyhow::Result<Outcome> {
    let mut suite = Suite::default();
    for &theory in theories {
        suite.run(format!("{theory} axioms at D={d}"), || {
            let report = theory.law(d)?.verify_axioms()?;
            let failing: Vec<String> = report
                .checks
                .iter()
                .filter(|c| !c.passed)
                .map(|c| format!("{} ({})", c.axiom, c.witness.as_deref().unwrap_or("")))
                .collect();
            verdict(failing.is_empty(), failing.join(", "))
        });
        suite.run(format!("{theory} n-series laws for m, n in -3..3"), || {
            let law = theory.law(d)?;
            n_series_laws(&law)
        });
    }
    if theories.contains(&Theory::Universal) {
        suite.run(
            format!("additive law conjugated by exp equals the universal law at D={d}"),
            || {
                let law = FormalGroupLaw::universal(d)?;
                let exp = law.exp().expect("universal law has a logarithm")?;
                let space = law.series().space().clone();
                let sum = Series::variable(&space, 0).try_add(&Series::variable(&space, 1))?;
                let unit = Series::variable(&SeriesSpace::univariate(law.ring(), "u", d), 0);
                let conjugated = FormalGroupLaw::from_series(sum, Some(unit))?.conjugate(&exp)?;
                verdict(conjugated.series() == law.series(), "")
            },
        );
    }
    suite.finish()
}

/// `[m+n] = F([m], [n])` and `[mn] = [m] ∘ [n]` for `m, n ∈ −3..3`.
fn n_series_laws(law: &FormalGroupLaw) -> anyhow::Result<(bool, String)> {
    let mut table = NSeries::new(law)?;
    for m in -3..=3i64 {
        for n in -3..=3i64 {
            let a = table.get(m)?;
            let b = table.get(n)?;
            if law.sum(&a, &b)? != table.get(m + n)? {
                return verdict(false, format!("[{}] ≠ F([{m}], [{n}])", m + n));
            }
            if a.compose(&[b])? != table.get(m * n)? {
                return verdict(false, format!("[{}] ≠ [{m}]∘[{n}]", m * n));
            }
        }
    }
    verdict(true, "")
}

pub fn whitney(theories: &[Theory], d: u32, trials: usize, seed: u64) -> anyhow::Result<Outcome> {
    let mut suite = Suite::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for &theory in theories {
        let mut failures = Vec::new();
        let mut errors = None;
        for trial in 0..trials {
            let r = rng.gen_range(1..=3usize);
            let a = rng.gen_range(1..=3usize);
            let b = rng.gen_range(1..=3usize);
            let result = (|| -> anyhow::Result<bool> {
                let base = torus_limit(r, theory, d)?;
                let mut draw = || rng.gen_range(-5..=5i64);
                let mut sample = |k: usize| {
                    (0..k)
                        .map(|_| sample_degree_one(base.space(), &mut draw))
                        .collect::<Result<Vec<_>, _>>()
                };
                let left = sample(a)?;
                let right = sample(b)?;
                Ok(whitney_check(&left, &right)?.passed)
            })();
            match result {
                Ok(true) => {}
                Ok(false) => failures.push(trial),
                Err(e) => {
                    errors.get_or_insert_with(|| format!("trial {trial}: {e:#}"));
                    failures.push(trial);
                }
            }
        }
        suite.run(
            format!("{theory} Whitney formula, {trials} trials, seed {seed}"),
            || match errors {
                Some(e) => verdict(false, e),
                None if failures.is_empty() => verdict(true, ""),
                None => verdict(false, format!("failing trials {failures:?}")),
            },
        );
    }
    suite.finish()
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

pub fn towers(theories: &[Theory], d: u32) -> anyhow::Result<Outcome> {
    let mut suite = Suite::default();
    for &theory in theories {
        for r in 1..=3usize {
            suite.run(format!("{theory} torus tower, rank {r}, D={d}"), || {
                // Surjectivity of every transition is checked inside the
                // stabilization search, which errors otherwise.
                let t = torus_coefficients(r, theory, d)?;
                let mut problems = Vec::new();
                for s in &t.stabilization {
                    let expected = match theory {
                        Theory::KTheory => d as usize + 2,
                        _ => s.degree as usize + 2,
                    };
                    match &s.outcome {
                        Stabilization::Stable { index } if *index == expected => {}
                        other => problems.push(format!(
                            "degree {}: {other:?}, expected stage {expected}",
                            s.degree
                        )),
                    }
                }
                for p in &t.pieces {
                    let expected = match theory {
                        Theory::KTheory => binomial(d as u64 + r as u64, r as u64),
                        _ => binomial(p.degree as u64 + r as u64 - 1, r as u64 - 1),
                    };
                    if p.rank != expected || !p.torsion().is_empty() {
                        problems.push(format!(
                            "degree {}: {p}, expected rank {expected}",
                            p.degree
                        ));
                    }
                }
                if !t.limit_agrees {
                    problems.push("stable stages differ from the limit".into());
                }
                verdict(problems.is_empty(), problems.join("; "))
            });
        }
    }
    if theories.contains(&Theory::KTheory) {
        suite
            .notes
            .push("ktheory pieces are computed at β = 1, so each degree stabilizes with the whole ring at stage D+2".into());
    }
    suite.finish()
}

fn factorial(m: u64) -> u64 {
    (1..=m).product()
}

pub fn ranks(theories: &[Theory], d: u32) -> anyhow::Result<Outcome> {
    let mut suite = Suite::default();
    for &theory in theories {
        let ring = theory.ring();
        let beta_one = theory == Theory::KTheory;
        for m in 1..=5usize {
            suite.run(format!("{theory} flag ring rank, m={m}"), || {
                let top = (m * (m - 1) / 2) as u32;
                let p = flag_ring(ring, m, top + 1)?;
                let rank = if beta_one {
                    graded_piece_snf(&p, 0)?.rank
                } else {
                    total_rank(&p)?
                };
                let expected = factorial(m as u64);
                verdict(rank == expected, format!("{rank}, expected {expected}"))
            });
        }
        for total in 2..=6usize {
            for n in 1..total {
                let i = total - n;
                suite.run(format!("{theory} Grassmannian rank, n={n}, i={i}"), || {
                    let p = grassmannian_ring(ring, n, i, (n * i + 1) as u32)?;
                    let rank = if beta_one {
                        graded_piece_snf(&p, 0)?.rank
                    } else {
                        total_rank(&p)?
                    };
                    let expected = binomial(total as u64, n as u64);
                    verdict(rank == expected, format!("{rank}, expected {expected}"))
                });
            }
        }
        for n in 1..=3usize {
            suite.run(format!("{theory} GL{n} ranks through degree {d}"), || {
                let g = gln_coefficients(n, theory, d)?;
                let mut problems = Vec::new();
                for p in &g.pieces {
                    let expected = if beta_one {
                        (0..=d).map(|k| partitions_bounded(k, n as u32)).sum()
                    } else {
                        partitions_bounded(p.degree as u32, n as u32)
                    };
                    if p.rank != expected || !p.torsion().is_empty() {
                        problems.push(format!(
                            "degree {}: {p}, expected rank {expected}",
                            p.degree
                        ));
                    }
                }
                if !g.evidence.matches {
                    problems.push(format!(
                        "Gr({n}, {}) differs from the limit",
                        n + g.evidence.i
                    ));
                }
                verdict(problems.is_empty(), problems.join("; "))
            });
        }
    }
    if theories.contains(&Theory::KTheory) {
        suite.notes.push(
            "ktheory ranks are those of the whole ring at β = 1, read off the degree-0 piece"
                .into(),
        );
    }
    suite.finish()
}

pub fn mu(theories: &[Theory], d: u32) -> anyhow::Result<Outcome> {
    let mut suite = Suite::default();
    for &theory in theories {
        for n in 2..=4i64 {
            match theory {
                Theory::Chow => suite.run(format!("chow μ{n}: ℤ/{n} in degrees 1..{d}"), || {
                    let m = mu_n_coefficients(n, theory, d)?;
                    let wrong: Vec<String> = m.pieces[1..]
                        .iter()
                        .filter(|p| p.invariant_factors != [BigInt::from(n)])
                        .map(|p| format!("degree {}: {p}", p.degree))
                        .collect();
                    let zero_ok = m.pieces[0].rank == 1 && m.pieces[0].torsion().is_empty();
                    verdict(wrong.is_empty() && zero_ok, wrong.join("; "))
                }),
                Theory::Universal => {
                    suite.run(format!("universal μ{n}: zero in degrees 1..{d}"), || {
                        let m = mu_n_coefficients(n, theory, d)?;
                        let nonzero: Vec<String> = m.pieces[1..]
                            .iter()
                            .filter(|p| !p.is_zero())
                            .map(|p| format!("degree {}: {p}", p.degree))
                            .collect();
                        let ok = nonzero.is_empty() && m.cofactor_invertible == Some(true);
                        verdict(ok, nonzero.join("; "))
                    })
                }
                Theory::KTheory => {}
            }
        }
    }
    if theories.contains(&Theory::KTheory) {
        suite
            .notes
            .push("ktheory μₙ has no reference values here; use `coeff mu` to inspect it".into());
    }
    suite.finish()
}

pub fn restriction(theories: &[Theory], d: u32) -> anyhow::Result<Outcome> {
    let mut suite = Suite::default();
    for &theory in theories {
        for n in 2..=3usize {
            suite.run(
                format!("{theory} GL{n} → torus restriction through degree {d}"),
                || {
                    let r = restrict_gln_to_torus(n, theory, d)?;
                    let mut problems = Vec::new();
                    if let Some(w) = &r.asymmetry {
                        problems.push(format!("not invariant: {w}"));
                    }
                    for (deg, k, rank) in &r.ranks {
                        if k != rank {
                            problems.push(format!("degree {deg}: rank {rank} of {k}"));
                        }
                    }
                    verdict(problems.is_empty(), problems.join("; "))
                },
            );
        }
    }
    suite.finish()
}
