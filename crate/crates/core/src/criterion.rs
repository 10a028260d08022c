//! The combinatorial criterion: when do the p-gons of a `{p,q}` tiling admit
//! an edge pairing `σ` with `(σρ)^q = 1`?
//!
//! Three routes to the same answer live here:
//!
//! * [`decide`]: the prime test, `spf(q) ≤ p`;
//! * [`construct_sigma`]: an explicit involution whose product with `ρ`
//!   has order exactly `m` for any `2 ≤ m ≤ p`;
//! * [`oracle_search`]: an exhaustive scan over all involutions of `S_p`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Largest `p` for which [`enumerate_involutions`] will run.
pub const ENUMERATION_CAP: usize = 12;

/// A hyperbolic tessellation type `{p,q}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TessellationType {
    p: u32,
    q: u32,
}

impl TessellationType {
    /// Validates `p, q ≥ 3` and `1/p + 1/q < 1/2`, i.e. `(p-2)(q-2) > 4`.
    pub fn new(p: u32, q: u32) -> Result<Self> {
        if p < 3 || q < 3 {
            return Err(Error::TooSmall { p, q });
        }
        if (p as u64 - 2) * (q as u64 - 2) <= 4 {
            return Err(Error::NotHyperbolic { p, q });
        }
        Ok(TessellationType { p, q })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }
}

/// An involution `σ ∈ S_p` together with `m = order(σρ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub sigma: Permutation,
    pub m: u64,
}

impl Witness {
    /// `σρ`, applying `ρ` first.
    pub fn sigma_rho(&self) -> Permutation {
        let rho = Permutation::rho(self.sigma.degree()).expect("witness degree is at least 3");
        self.sigma.compose(&rho).expect("same degree")
    }

    /// Whether `(σρ)^q` is the identity.
    pub fn closes_at(&self, q: u32) -> bool {
        (q as u64).is_multiple_of(self.m)
    }
}

/// Least prime factor of `q`, by trial division up to `√q`.
pub fn smallest_prime_factor(q: u64) -> Result<u64> {
    if q < 2 {
        return Err(Error::InvalidDegree {
            degree: q as usize,
            reason: "smallest prime factor needs q ≥ 2",
        });
    }
    let mut d = 2;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return Ok(d);
        }
        d += 1;
    }
    Ok(q)
}

/// True iff the p-gons of `{p,q}` are fundamental domains of some Fuchsian
/// group: `q` has a prime divisor `≤ p`.
pub fn decide(t: TessellationType) -> bool {
    qualifying_prime(t).is_some()
}

/// The smallest prime divisor of `q` when it is at most `p`.
pub fn qualifying_prime(t: TessellationType) -> Option<u64> {
    let spf = smallest_prime_factor(t.q as u64).expect("q ≥ 3");
    (spf <= t.p as u64).then_some(spf)
}

/// Smallest divisor `d` of `q` with `2 ≤ d ≤ p`, found by direct scan.
pub fn smallest_divisor_in_range(p: u32, q: u32) -> Option<u32> {
    (2..=p).find(|d| q.is_multiple_of(*d))
}

/// The transpositions making up the constructed `σ` for `(p, m)`, as
/// 1-based pairs, in formula order. With `p = am + r`:
///
/// ```text
/// ∏_{j=1}^{a-1} ( j(m-1)+1 , p-(j-1) )  ·  ∏_{k=0}^{r-1} ( p-a-2k , p-a-2k+1 )
/// ```
///
/// Either product may be empty (`a = 1`, resp. `r = 0`).
pub fn sigma_transpositions(p: u32, m: u32) -> Result<Vec<(i64, i64)>> {
    if p < 3 || m < 2 || m > p {
        return Err(Error::InvalidDivisor { p, m });
    }
    let (p, m) = (p as i64, m as i64);
    let a = p / m;
    let r = p % m;
    let mut pairs = Vec::new();
    for j in 1..a {
        pairs.push((j * (m - 1) + 1, p - (j - 1)));
    }
    for k in 0..r {
        pairs.push((p - a - 2 * k, p - a - (2 * k - 1)));
    }
    Ok(pairs)
}

/// Builds an involution `σ ∈ S_p` such that `σρ` has order exactly `m`.
pub fn construct_sigma(p: u32, m: u32) -> Result<Witness> {
    let pairs = sigma_transpositions(p, m)?;
    let mut checked = Vec::with_capacity(pairs.len());
    for (x, y) in pairs {
        if x < 1 || y < 1 || x > p as i64 || y > p as i64 {
            return Err(Error::Consistency(format!(
                "transposition ({x} {y}) leaves 1..={p}"
            )));
        }
        checked.push((x as usize, y as usize));
    }
    let sigma = Permutation::from_transpositions(p as usize, &checked)?;
    let rho = Permutation::rho(p as usize)?;
    let m_actual = sigma.compose(&rho)?.order();
    if !sigma.is_involution() || m_actual != m as u64 {
        return Err(Error::Consistency(format!(
            "constructed sigma {sigma} for p={p}, m={m} has order(σρ)={m_actual}"
        )));
    }
    Ok(Witness { sigma, m: m_actual })
}

/// Every involution of `S_p` (identity included), each once, in
/// lexicographic order of one-line notation.
pub fn enumerate_involutions(p: usize) -> Result<Vec<Permutation>> {
    if p == 0 {
        return Err(Error::InvalidDegree {
            degree: 0,
            reason: "degree must be at least 1",
        });
    }
    if p > ENUMERATION_CAP {
        return Err(Error::EnumerationCap {
            p,
            cap: ENUMERATION_CAP,
        });
    }
    let mut out = Vec::new();
    let mut images = vec![0usize; p];
    fill_involutions(&mut images, 0, &mut out);
    Ok(out)
}

// `images` holds 1-based values, 0 meaning unassigned. At the least free
// position `i` the candidate images are `i` itself, then each free `j > i`
// in increasing order, which yields lexicographic order overall.
fn fill_involutions(images: &mut [usize], from: usize, out: &mut Vec<Permutation>) {
    let Some(i) = (from..images.len()).find(|&i| images[i] == 0) else {
        out.push(Permutation::new(images.to_vec()).expect("built as a bijection"));
        return;
    };
    images[i] = i + 1;
    fill_involutions(images, i + 1, out);
    for j in i + 1..images.len() {
        if images[j] == 0 {
            images[i] = j + 1;
            images[j] = i + 1;
            fill_involutions(images, i + 1, out);
            images[j] = 0;
        }
    }
    images[i] = 0;
}

/// Result of an exhaustive oracle scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleScan {
    pub witness: Option<Witness>,
    /// Number of involutions examined, including the witness if found.
    pub examined: usize,
}

/// Scans involutions in lexicographic order and stops at the first `σ`
/// with `order(σρ) | q`.
pub fn oracle_scan(t: TessellationType) -> Result<OracleScan> {
    let p = t.p as usize;
    let rho = Permutation::rho(p)?;
    let mut examined = 0;
    for sigma in enumerate_involutions(p)? {
        examined += 1;
        let m = sigma.compose(&rho)?.order();
        if (t.q as u64).is_multiple_of(m) {
            return Ok(OracleScan {
                witness: Some(Witness { sigma, m }),
                examined,
            });
        }
    }
    Ok(OracleScan {
        witness: None,
        examined,
    })
}

pub fn oracle_search(t: TessellationType) -> Result<Option<Witness>> {
    Ok(oracle_scan(t)?.witness)
}

/// The witness certificate as emitted on the wire. Field order is fixed.
#[derive(Debug, Clone, Serialize)]
pub struct Certificate {
    pub p: u32,
    pub q: u32,
    pub realizable: bool,
    pub m: Option<u64>,
    pub sigma: Option<Permutation>,
    pub sigma_cycles: Option<String>,
    pub sigma_rho_cycles: Option<String>,
}

impl Certificate {
    pub fn new(t: TessellationType, witness: Option<&Witness>) -> Self {
        match witness {
            Some(w) => Certificate {
                p: t.p,
                q: t.q,
                realizable: true,
                m: Some(w.m),
                sigma: Some(w.sigma.clone()),
                sigma_cycles: Some(w.sigma.to_string()),
                sigma_rho_cycles: Some(w.sigma_rho().to_string()),
            },
            None => Certificate {
                p: t.p,
                q: t.q,
                realizable: false,
                m: None,
                sigma: None,
                sigma_cycles: None,
                sigma_rho_cycles: None,
            },
        }
    }
}
