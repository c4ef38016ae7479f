use super::ext::{ext_k_module, ExtKModule};
use super::operators::lift_and_operators;
use super::variety::{annihilator_window, VarietyIdeal};
use crate::error::{Error, Result};
use crate::resolve::{resolve_min, ModulePresentation, Resolution};

/// Window sizes for the variety computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VarietyConfig {
    /// Starting `N`; `None` means `max(8, 2c + 4)`.
    pub steps: Option<usize>,
    /// Operator-degree cap `D`; `None` means `⌊N/2⌋`.
    pub degree_cap: Option<usize>,
    /// Largest `N` the stabilization guard may try.
    pub max_steps: usize,
}

impl Default for VarietyConfig {
    fn default() -> Self {
        VarietyConfig { steps: None, degree_cap: None, max_steps: 20 }
    }
}

impl VarietyConfig {
    pub fn with_steps(steps: usize) -> Self {
        VarietyConfig { steps: Some(steps), ..Default::default() }
    }

    pub fn start(&self, codim: usize) -> usize {
        self.steps.unwrap_or(8.max(2 * codim + 4))
    }

    fn cap(&self, n: usize) -> usize {
        self.degree_cap.map_or(n / 2, |d| d.min(n / 2))
    }
}

/// Output of [`support_variety`].
#[derive(Clone, Debug)]
pub struct SupportVariety {
    /// Accepted annihilator `a_{N+2}`.
    pub ideal: VarietyIdeal,
    /// `N` at which the guard accepted.
    pub steps: usize,
    /// The two compared candidates `a_N`, `a_{N+2}`.
    pub candidates: (VarietyIdeal, VarietyIdeal),
    pub dimension: usize,
    pub complexity: usize,
    /// Resolution to `N + 2` steps with operators attached.
    pub resolution: Resolution,
    pub ext: ExtKModule,
}

impl SupportVariety {
    pub fn betti(&self) -> Vec<usize> {
        self.resolution.betti()
    }
}

/// Least `r` such that `r` rounds of `b_i - b_{i-2}` vanish on the last
/// `⌈N/2⌉` indices of `b_0..b_N`.
pub fn complexity_of(betti: &[usize]) -> usize {
    let n = betti.len() - 1;
    let window = n.div_ceil(2).max(1);
    let lo = n + 1 - window;
    let mut seq: Vec<i64> = betti.iter().map(|&b| b as i64).collect();
    let mut r = 0;
    // `valid` is the first index where the r-fold difference is defined
    let mut valid = 0;
    loop {
        if (lo.max(valid)..=n).all(|i| seq[i] == 0) {
            return r;
        }
        if valid + 2 > lo {
            // too few terms left to difference again
            return r + 1;
        }
        for i in (valid + 2..=n).rev() {
            seq[i] -= seq[i - 2];
        }
        valid += 2;
        r += 1;
    }
}

/// Polynomial growth rate of the Betti numbers of `M` over `N` steps.
pub fn complexity(m: &ModulePresentation, steps: usize) -> Result<usize> {
    Ok(complexity_of(&resolve_min(m, steps)?.betti()))
}

/// Candidate annihilator from a resolution of at least `n` steps.
pub fn candidate(e: &ExtKModule, m: &ModulePresentation, n: usize, cfg: &VarietyConfig) -> Result<VarietyIdeal> {
    annihilator_window(&e.truncated(n), m.ring().cohomology_ring(), cfg.cap(n))
}

/// Support variety of `M`: the annihilator of `E(M, k)` computed on growing
/// windows until `a_N` and `a_{N+2}` agree up to radical and the dimension
/// matches the Betti growth.
pub fn support_variety(m: &ModulePresentation, cfg: &VarietyConfig) -> Result<SupportVariety> {
    let ring = m.ring();
    let budget = ring.budget();
    let mut n = cfg.start(ring.codim());
    if n < 2 {
        return Err(Error::input("steps", "the variety window needs N ≥ 2"));
    }
    let mut last = None;
    while n <= cfg.max_steps {
        let res = lift_and_operators(&resolve_min(m, n + 2)?)?;
        let e = ext_k_module(&res)?;
        let a_n = candidate(&e, m, n, cfg)?;
        let a_n2 = candidate(&e, m, n + 2, cfg)?;
        let d_n = a_n.dimension(budget)?;
        let d_n2 = a_n2.dimension(budget)?;
        let cx = complexity_of(&res.betti());
        if d_n == d_n2 && a_n.equal(&a_n2, budget)? && cx == d_n2 {
            return Ok(SupportVariety {
                ideal: a_n2.clone(),
                steps: n,
                candidates: (a_n, a_n2),
                dimension: d_n2,
                complexity: cx,
                resolution: res,
                ext: e,
            });
        }
        last = Some((a_n, a_n2, cx));
        n += 2;
    }
    let msg = match last {
        Some((a, b, cx)) => format!(
            "not stabilized within {} steps: a_N = {}, a_N+2 = {}, complexity {}",
            cfg.max_steps,
            a.describe(),
            b.describe(),
            cx
        ),
        None => format!("starting window exceeds the step budget {}", cfg.max_steps),
    };
    Err(Error::budget("not_stabilized", msg))
}
