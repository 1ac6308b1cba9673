//! Exhaustive law suite for the track groups.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::binom_sign;
use super::clifford::Multivector;
use super::perm::{factorial, Perm};
use super::track::{TrackElem, MAX_TABLE_DEGREE};
use crate::error::{Error, Result};
use crate::report::{LawReport, LawRun, Outcome, Witness};

/// Degree up to which associativity is checked on every triple.
const ASSOC_EXHAUSTIVE: usize = 5;
const SAMPLES: usize = 20_000;

fn elements(n: usize) -> Vec<TrackElem> {
    Perm::all(n)
        .into_iter()
        .flat_map(|p| [TrackElem::from_parts(p.clone(), false), TrackElem::from_parts(p, true)])
        .collect()
}

fn omega_pow(n: usize, e: u64) -> TrackElem {
    if e % 2 == 1 {
        TrackElem::omega(n)
    } else {
        TrackElem::identity(n)
    }
}

fn tauhat(n: usize, m: usize) -> TrackElem {
    TrackElem::shuffle_lift(n, m).expect("degree within bound")
}

fn sl(t: &TrackElem, k: usize) -> TrackElem {
    t.suspend_left(k).expect("degree within bound")
}

fn sr(t: &TrackElem, k: usize) -> TrackElem {
    t.suspend_right(k).expect("degree within bound")
}

fn eq_witness(inputs: Vec<String>, lhs: &TrackElem, rhs: &TrackElem) -> Outcome {
    Outcome::compare(lhs, rhs, || Witness::new(inputs, lhs.to_string(), rhs.to_string()))
}

fn binom2(k: usize) -> u64 {
    (k * k.saturating_sub(1) / 2) as u64
}

/// Checks the group laws of `Σ̃ₙ` for every `n <= n_max`, one report per law.
pub fn verify_track_laws(n_max: usize) -> Result<Vec<LawReport>> {
    if n_max > MAX_TABLE_DEGREE {
        return Err(Error::Unsupported(format!(
            "exhaustive track verification is limited to n <= {MAX_TABLE_DEGREE}"
        )));
    }
    let degrees = 0..=n_max;
    let mut out = Vec::new();

    let mut run = LawRun::new("TG-ORDER", "|Σ̃n| = 2·n!");
    for n in degrees.clone() {
        let mut gens: Vec<TrackElem> = (1..n).map(|i| TrackElem::generator(n, i).unwrap()).collect();
        gens.push(TrackElem::omega(n));
        let mut seen = std::collections::HashSet::new();
        let mut frontier = vec![TrackElem::identity(n)];
        seen.insert(TrackElem::identity(n));
        while let Some(x) = frontier.pop() {
            for g in &gens {
                let y = &x * g;
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        let expected = 2 * factorial(n);
        run.record(Outcome::check(seen.len() == expected, || {
            Witness::new(vec![format!("n={n}")], seen.len().to_string(), expected.to_string())
        }));
    }
    out.push(run.finish());

    let mut run = LawRun::new("TG-REL", "presentation relations of Σ̃n");
    for n in degrees.clone() {
        let w = TrackElem::omega(n);
        let one = TrackElem::identity(n);
        let cl_one = Multivector::one(n);
        run.record(eq_witness(vec![format!("n={n}"), "w w".into()], &(&w * &w), &one));
        run.record(Outcome::check(w.clifford_image() == cl_one.neg(), || {
            Witness::new(vec![format!("n={n}"), "w".into()], w.clifford_image().to_string(), "-1")
        }));
        for i in 1..n {
            let ti = TrackElem::generator(n, i).unwrap();
            let vi = Multivector::generator(n, i);
            run.record(eq_witness(vec![format!("t{i}"), "t{i} t{i}".into()], &(&ti * &ti), &one));
            run.record(Outcome::check(vi.mul(&vi) == cl_one, || {
                Witness::new(vec![format!("v{i}")], vi.mul(&vi).to_string(), "1")
            }));
            run.record(eq_witness(vec![format!("t{i}"), "w".into()], &(&w * &ti), &(&ti * &w)));
            for j in i + 1..n {
                let tj = TrackElem::generator(n, j).unwrap();
                let vj = Multivector::generator(n, j);
                let inputs = vec![format!("n={n}"), format!("t{i}"), format!("t{j}")];
                if j == i + 1 {
                    let b = &ti * &tj;
                    run.record(eq_witness(inputs.clone(), &b.pow(3), &one));
                    let c = vi.mul(&vj);
                    let c3 = c.mul(&c).mul(&c);
                    run.record(Outcome::check(c3 == cl_one, || Witness::new(inputs, c3.to_string(), "1")));
                } else {
                    run.record(eq_witness(inputs.clone(), &(&ti * &tj), &(&w * &(&tj * &ti))));
                    let (a, b) = (vi.mul(&vj), vj.mul(&vi).neg());
                    run.record(Outcome::check(a == b, || Witness::new(inputs, a.to_string(), b.to_string())));
                }
            }
        }
    }
    out.push(run.finish());

    let mut run = LawRun::new("TG-CLIFFORD", "fast products agree with the Clifford model");
    for n in degrees.clone() {
        let els: Vec<TrackElem> =
            Perm::all(n).into_iter().flat_map(|p| [TrackElem::from_parts(p.clone(), false), TrackElem::from_parts(p, true)]).collect();
        let images: Vec<Multivector> = els.iter().map(TrackElem::clifford_image).collect();
        let k = els.len();
        run.run_items(k * k, |idx| {
            let (a, b) = (idx / k, idx % k);
            let fast = (&els[a] * &els[b]).clifford_image();
            let slow = images[a].mul(&images[b]);
            Outcome::check(fast == slow, || {
                Witness::new(vec![els[a].to_string(), els[b].to_string()], fast.to_string(), slow.to_string())
            })
        });
    }
    out.push(run.finish());

    let mut rng = ChaCha8Rng::seed_from_u64(0x7261636b);
    let mut run = LawRun::new("TG-ASSOC", "(ab)c = a(bc)");
    for n in degrees.clone() {
        let els: Vec<TrackElem> = Perm::all(n).into_iter().map(|p| TrackElem::from_parts(p, false)).collect();
        let k = els.len();
        let triples: Vec<(usize, usize, usize)> = if n <= ASSOC_EXHAUSTIVE {
            (0..k * k * k).map(|i| (i / (k * k), (i / k) % k, i % k)).collect()
        } else {
            (0..SAMPLES).map(|_| (rng.gen_range(0..k), rng.gen_range(0..k), rng.gen_range(0..k))).collect()
        };
        if n > ASSOC_EXHAUSTIVE {
            run.note(format!("degree {n}: {SAMPLES} sampled triples"));
        }
        run.run_items(triples.len(), |i| {
            let (a, b, c) = triples[i];
            let (a, b, c) = (&els[a], &els[b], &els[c]);
            let inputs = || vec![a.to_string(), b.to_string(), c.to_string()];
            eq_witness(inputs(), &(&(a * b) * c), &(a * &(b * c)))
        });
    }
    out.push(run.finish());

    let mut run = LawRun::new("TG-INV", "t·t⁻¹ = t⁻¹·t = 1");
    for n in degrees.clone() {
        let one = TrackElem::identity(n);
        for t in elements(n) {
            let inv = t.inverse();
            run.record(eq_witness(vec![t.to_string()], &(&t * &inv), &one));
            run.record(eq_witness(vec![t.to_string()], &(&inv * &t), &one));
        }
    }
    out.push(run.finish());

    let mut run = LawRun::new("TG-SUSP", "suspensions are injective homomorphisms over δ fixing ω");
    for n in degrees.clone() {
        let els = elements(n);
        for m in 0..=n_max - n {
            let left: Vec<TrackElem> = els.iter().map(|t| sl(t, m)).collect();
            let right: Vec<TrackElem> = els.iter().map(|t| sr(t, m)).collect();
            let id_m = Perm::identity(m);
            for (i, t) in els.iter().enumerate() {
                let inputs = || vec![t.to_string(), format!("m={m}")];
                let dl = left[i].delta().clone();
                let want = id_m.cross(t.delta());
                run.record(Outcome::check(dl == want, || {
                    Witness::new(inputs(), dl.to_string(), want.to_string()).clause("delta left")
                }));
                let dr = right[i].delta().clone();
                let want = t.delta().cross(&id_m);
                run.record(Outcome::check(dr == want, || {
                    Witness::new(inputs(), dr.to_string(), want.to_string()).clause("delta right")
                }));
            }
            run.record(eq_witness(vec![format!("n={n}"), format!("m={m}")], &sl(&TrackElem::omega(n), m), &TrackElem::omega(n + m)));
            run.record(eq_witness(vec![format!("n={n}"), format!("m={m}")], &sr(&TrackElem::omega(n), m), &TrackElem::omega(n + m)));
            let distinct = |v: &[TrackElem]| v.iter().collect::<std::collections::HashSet<_>>().len() == v.len();
            run.record(Outcome::check(distinct(&left) && distinct(&right), || {
                Witness::new(vec![format!("n={n}"), format!("m={m}")], "collision", "injective")
            }));
            let k = els.len();
            run.run_items(k * k, |idx| {
                let (a, b) = (idx / k, idx % k);
                let prod = &els[a] * &els[b];
                let pi = prod_index(&prod);
                let inputs = || vec![els[a].to_string(), els[b].to_string(), format!("m={m}")];
                let l = eq_witness(inputs(), &sl(&prod, m), &(&left[a] * &left[b]));
                if !matches!(l, Outcome::Holds) {
                    return l;
                }
                debug_assert_eq!(els[pi], prod);
                eq_witness(inputs(), &right[pi], &(&right[a] * &right[b]))
            });
        }
    }
    out.push(run.finish());

    let mut run = LawRun::new("TG-CROSS", "τ_{n,m}(σ×τ) = (τ×σ)τ_{n,m}");
    for n in degrees.clone() {
        for m in 0..=n_max - n {
            let tau = Perm::block_shuffle(n, m);
            for s in Perm::all(n) {
                for t in Perm::all(m) {
                    let lhs = tau.mul(&s.cross(&t));
                    let rhs = t.cross(&s).mul(&tau);
                    run.record(Outcome::check(lhs == rhs, || {
                        Witness::new(vec![s.to_string(), t.to_string()], lhs.to_string(), rhs.to_string())
                    }));
                }
            }
        }
    }
    out.push(run.finish());

    let mut run = LawRun::new("TG-TAUHAT", "δ(τ̂_{n,m}) = τ_{n,m}");
    for n in degrees.clone() {
        for m in 0..=n_max - n {
            let d = tauhat(n, m).delta().clone();
            let want = Perm::block_shuffle(n, m);
            run.record(Outcome::check(d == want, || {
                Witness::new(vec![format!("n={n}"), format!("m={m}")], d.to_string(), want.to_string())
            }));
        }
    }
    out.push(run.finish());

    let mut run = LawRun::new("TG-CAMBIO", "(Sᵐ∧t)τ̂ = τ̂(t∧Sᵐ)ω^{nm·binom(εδt,2)}");
    for n in degrees.clone() {
        for m in 0..=n_max - n {
            let th = tauhat(n, m);
            for t in elements(n) {
                let e = (n * m) as u64 * binom_sign(t.epsilon()) as u64;
                let lhs = &sl(&t, m) * &th;
                let rhs = &(&th * &sr(&t, m)) * &omega_pow(n + m, e);
                run.record(eq_witness(vec![t.to_string(), format!("m={m}")], &lhs, &rhs));
            }
        }
    }
    out.push(run.finish());

    let mut run = LawRun::new("TG-RECHO1", "τ̂_{p,q}τ̂_{q,p} = ω^{binom(p,2)binom(q,2)}");
    for p in degrees.clone() {
        for q in 0..=n_max - p {
            let lhs = &tauhat(p, q) * &tauhat(q, p);
            let rhs = omega_pow(p + q, binom2(p) * binom2(q));
            run.record(eq_witness(vec![format!("p={p}"), format!("q={q}")], &lhs, &rhs));
        }
    }
    out.push(run.finish());

    let mut run = LawRun::new("TG-RECHO2", "four-fold shuffle identity");
    for p in degrees.clone() {
        for q in 0..=n_max - p {
            for r in 0..=n_max - p - q {
                for s in 0..=n_max - p - q - r {
                    let f1 = sr(&sl(&tauhat(p, s), r), q);
                    let f2 = sl(&tauhat(q, s), r + p);
                    let f3 = sr(&tauhat(p, r), q + s);
                    let f4 = sr(&sl(&tauhat(q, r), p), s);
                    let lhs = &(&(&f1 * &f2) * &f3) * &f4;
                    let e = (r * s) as u64 * (binom2(p) + binom2(q) + (p * q) as u64);
                    let rhs = &tauhat(p + q, r + s) * &omega_pow(p + q + r + s, e);
                    let inputs = vec![format!("p={p}"), format!("q={q}"), format!("r={r}"), format!("s={s}")];
                    run.record(eq_witness(inputs, &lhs, &rhs));
                }
            }
        }
    }
    out.push(run.finish());

    let mut run = LawRun::new("TG-EQD", "τ̂_{2n,2n}² = ω^{binom(2n,2)²}");
    for n in (1..).take_while(|n| 4 * n <= n_max) {
        let t = tauhat(2 * n, 2 * n);
        let b = binom2(2 * n);
        run.record(eq_witness(vec![format!("n={n}")], &(&t * &t), &omega_pow(4 * n, b * b)));
    }
    out.push(run.finish());

    let mut run = LawRun::new("TG-SIGN", "ε(δ(tᵢ)) = -1");
    for n in degrees {
        for i in 1..n {
            let e = TrackElem::generator(n, i).unwrap().epsilon();
            run.record(Outcome::check(e == -1, || Witness::new(vec![format!("t{i}")], e.to_string(), "-1")));
        }
    }
    out.push(run.finish());

    Ok(out)
}

/// Position of `t` in the order produced by `elements`.
fn prod_index(t: &TrackElem) -> usize {
    2 * t.delta().rank() + t.omega_bit() as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    #[test]
    fn laws_hold_through_degree_four() {
        let reports = verify_track_laws(4).unwrap();
        for r in &reports {
            assert!(r.passed(), "{} failed: {:?}", r.law_id, r.witness);
        }
        let eqd = reports.iter().find(|r| r.law_id == "TG-EQD").unwrap();
        assert_eq!(eqd.status, Status::Pass);
        assert!(eqd.tuples_checked > 0);
    }

    #[test]
    fn cambio_at_degree_one_with_omega() {
        let th = tauhat(1, 1);
        let w = TrackElem::omega(1);
        assert_eq!(&sl(&w, 1) * &th, &th * &sr(&w, 1));
    }

    #[test]
    fn recho_one_three() {
        assert!((&tauhat(1, 3) * &tauhat(3, 1)).is_identity());
    }

    #[test]
    fn rejects_large_bound() {
        assert!(verify_track_laws(MAX_TABLE_DEGREE + 1).is_err());
    }
}
