use serde_json::{json, Map, Value};

use crate::arith::{poly_parse, poly_print, Poly};
use crate::cohomology::{
    ext_k_module, lift_and_operators, operator_identity_holds, support_variety, VarietyConfig, VarietyIdeal,
};
use crate::construct::{check_carlson, decompose, phi_of, pushout_cut, realize, DecomposeConfig};
use crate::error::{Error, Result};
use crate::groebner::GbBudget;
use crate::resolve::{
    is_mcm, present_module, resolve_min, vector_model, GradedMatrix, ModulePresentation, Resolution, Ring, RingSpec,
};

/// Knobs shared by every command.
#[derive(Clone, Debug)]
pub struct JobConfig {
    /// Resolution length; for `variety` the starting `N`.
    pub steps: Option<usize>,
    /// Operator-degree cap of the annihilator window.
    pub degree_cap: Option<usize>,
    pub max_steps: usize,
    pub budget: GbBudget,
    /// Turn failed theorem checks into verification errors.
    pub verify: bool,
    pub seed: u64,
    pub attempts: usize,
}

impl Default for JobConfig {
    fn default() -> Self {
        let d = DecomposeConfig::default();
        JobConfig {
            steps: None,
            degree_cap: None,
            max_steps: VarietyConfig::default().max_steps,
            budget: GbBudget::default(),
            verify: false,
            seed: d.seed,
            attempts: d.attempts,
        }
    }
}

impl JobConfig {
    pub fn check(&self) -> Result<()> {
        let bad = [
            ("steps", self.steps.unwrap_or(1)),
            ("degree cap", self.degree_cap.unwrap_or(1)),
            ("max steps", self.max_steps),
            ("pair budget", self.budget.max_pairs),
            ("degree budget", self.budget.max_degree as usize),
            ("attempts", self.attempts),
        ]
        .into_iter()
        .find(|(_, v)| *v == 0);
        match bad {
            Some((name, _)) => Err(Error::input("bad_config", format!("{name} must be positive"))),
            None => Ok(()),
        }
    }

    pub fn variety(&self) -> VarietyConfig {
        VarietyConfig {
            steps: self.steps,
            degree_cap: self.degree_cap,
            max_steps: self.max_steps.max(self.steps.unwrap_or(0)),
        }
    }

    pub fn decompose(&self) -> DecomposeConfig {
        DecomposeConfig { seed: self.seed, attempts: self.attempts }
    }
}

/// A command and its non-file arguments.
#[derive(Clone, Debug)]
pub enum Command {
    Validate,
    Resolve,
    Operators,
    Variety,
    Cut { eta: String },
    Realize { etas: Vec<String> },
    Decompose,
    CheckCarlson { a1: String, a2: String },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::Resolve => "resolve",
            Command::Operators => "operators",
            Command::Variety => "variety",
            Command::Cut { .. } => "cut",
            Command::Realize { .. } => "realize",
            Command::Decompose => "decompose",
            Command::CheckCarlson { .. } => "check-carlson",
        }
    }

    pub fn needs_module(&self) -> bool {
        !matches!(self, Command::Validate | Command::Realize { .. })
    }
}

/// Report plus the error that ended the run, if any.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: Map<String, Value>,
    pub error: Option<Error>,
    /// Module file produced by `cut` or `realize`.
    pub module: Option<String>,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        self.error.as_ref().map_or(0, |e| e.exit_code())
    }
}

pub fn error_value(e: &Error) -> Value {
    json!({ "kind": e.kind.as_str(), "reason": e.reason, "message": e.message })
}

fn betti_table(res: &Resolution) -> Vec<String> {
    let n = res.len();
    let rows: Vec<i32> = (0..=n).flat_map(|i| res.degrees(i).iter().map(move |s| s - i as i32)).collect();
    let mut out = Vec::new();
    let betti = res.betti();
    let (lo, hi) = match (rows.iter().min(), rows.iter().max()) {
        (Some(&a), Some(&b)) => (a, b),
        _ => return vec!["total: 0".into()],
    };
    let mut lines: Vec<(String, Vec<String>)> = vec![
        (String::new(), (0..=n).map(|i| i.to_string()).collect()),
        ("total:".into(), betti.iter().map(|b| b.to_string()).collect()),
    ];
    for j in lo..=hi {
        let cells = (0..=n)
            .map(|i| {
                let c = res.degrees(i).iter().filter(|&&s| s - i as i32 == j).count();
                if c == 0 {
                    "-".to_string()
                } else {
                    c.to_string()
                }
            })
            .collect();
        lines.push((format!("{j}:"), cells));
    }
    let label = lines.iter().map(|l| l.0.len()).max().unwrap();
    let widths: Vec<usize> = (0..=n).map(|i| lines.iter().map(|l| l.1[i].len()).max().unwrap()).collect();
    for (l, cells) in lines {
        let mut s = format!("{l:>label$}");
        for (c, w) in cells.iter().zip(&widths) {
            s.push_str(&format!(" {c:>w$}"));
        }
        out.push(s);
    }
    out
}

fn matrix_rows(m: &GradedMatrix, ring: &Ring) -> Value {
    let a = ring.ambient();
    Value::Array(
        m.to_rows()
            .iter()
            .map(|row| Value::Array(row.iter().map(|p| Value::String(poly_print(p, a))).collect()))
            .collect(),
    )
}

fn ideal(i: &VarietyIdeal) -> Value {
    json!(i.gens_text())
}

fn module_value(m: &ModulePresentation) -> Value {
    json!({ "gens": m.gen_degrees(), "relations": m.relations().cols(), "text": m.to_text() })
}

fn ring_value(ring: &Ring) -> Value {
    json!({
        "description": ring.describe(),
        "codim": ring.codim(),
        "dim": ring.dim(),
        "artinian": ring.is_artinian(),
        "cohomology_vars": ring.cohomology_ring().vars(),
    })
}

fn h_element(ring: &Ring, text: &str) -> Result<Poly> {
    poly_parse(text, ring.cohomology_ring())
}

fn resolution_fields(r: &mut Map<String, Value>, res: &Resolution) {
    r.insert("steps".into(), json!(res.len()));
    r.insert("betti".into(), json!(res.betti()));
    r.insert("betti_table".into(), json!(betti_table(res).join("\n") + "\n"));
}

type Step = (Map<String, Value>, Option<Error>, Option<String>);

fn validate(m: Option<&ModulePresentation>) -> Result<Step> {
    let mut r = Map::new();
    if let Some(m) = m {
        r.insert("module".into(), module_value(m));
        let finite = match vector_model(m) {
            Ok(v) => Some(v.dim()),
            Err(e) if e.reason == "infinite_length" => None,
            Err(e) => return Err(e),
        };
        r.insert("finite_length".into(), json!(finite.is_some()));
        r.insert("length".into(), json!(finite));
        r.insert("mcm".into(), json!(is_mcm(m)?));
    }
    Ok((r, None, None))
}

fn resolve_cmd(m: &ModulePresentation, cfg: &JobConfig) -> Result<Step> {
    let res = resolve_min(m, cfg.steps.unwrap_or(6))?;
    let ring = res.ring().clone();
    let mut r = Map::new();
    resolution_fields(&mut r, &res);
    let ds: Vec<Value> = (1..=res.len())
        .map(|i| json!({ "step": i, "source": res.degrees(i), "rows": matrix_rows(res.d(i), &ring) }))
        .collect();
    r.insert("differentials".into(), Value::Array(ds));
    Ok((r, None, None))
}

fn operators_cmd(m: &ModulePresentation, cfg: &JobConfig) -> Result<Step> {
    let res = lift_and_operators(&resolve_min(m, cfg.steps.unwrap_or(4))?)?;
    let ring = res.ring().clone();
    let mut r = Map::new();
    resolution_fields(&mut r, &res);
    let identity = operator_identity_holds(&res);
    r.insert("identity_holds".into(), json!(identity));
    let ext = ext_k_module(&res)?;
    r.insert("ext_dims".into(), json!(ext.dims));
    let commute = ext.actions_commute();
    r.insert("actions_commute".into(), json!(commute));
    let mut ops = Vec::new();
    let ci = ring.codim();
    for i in 0.. {
        if res.operator(i, 0).is_none() {
            break;
        }
        for j in 0..ci {
            let t = res.operator(i, j).unwrap();
            ops.push(json!({
                "step": i,
                "chi": ring.cohomology_ring().vars()[j],
                "source": t.source,
                "target": t.target,
                "rows": matrix_rows(t, &ring),
            }));
        }
    }
    r.insert("operators".into(), Value::Array(ops));
    let err = (!identity || !commute)
        .then(|| Error::verification("operator_identity", "operator identity or commutativity failed"));
    Ok((r, err, None))
}

fn variety_cmd(m: &ModulePresentation, cfg: &JobConfig) -> Result<Step> {
    let v = support_variety(m, &cfg.variety())?;
    let mut r = Map::new();
    r.insert("stabilized".into(), json!(true));
    r.insert("window".into(), json!(v.steps));
    r.insert("candidate_n".into(), ideal(&v.candidates.0));
    r.insert("candidate_n_plus_2".into(), ideal(&v.candidates.1));
    r.insert("annihilator".into(), ideal(&v.ideal));
    r.insert("dimension".into(), json!(v.dimension));
    r.insert("complexity".into(), json!(v.complexity));
    resolution_fields(&mut r, &v.resolution);
    Ok((r, None, None))
}

fn cut_cmd(m: &ModulePresentation, eta: &str, cfg: &JobConfig) -> Result<Step> {
    let ring = m.ring().clone();
    let budget = ring.budget();
    let h = h_element(&ring, eta)?;
    let theta = phi_of(m, &h)?;
    let mut r = Map::new();
    r.insert("eta".into(), json!(poly_print(&h, ring.cohomology_ring())));
    r.insert("ext_degree".into(), json!(theta.degree));
    r.insert("internal_degree".into(), json!(theta.internal_degree));
    let cocycle = theta.cocycle_holds()?;
    r.insert("cocycle".into(), json!(cocycle));
    r.insert("representative".into(), matrix_rows(&theta.t, &ring));
    if !cocycle {
        return Ok((r, Some(Error::internal("cocycle_failed", "φ(η) is not a cocycle")), None));
    }
    let k = pushout_cut(&theta)?;
    r.insert("cut_module".into(), module_value(&k));
    let vcfg = cfg.variety();
    let vm = support_variety(m, &vcfg)?.ideal;
    let vk = support_variety(&k, &vcfg)?;
    let expected = vm.intersect(&VarietyIdeal::new(ring.cohomology_ring(), vec![h])?, budget)?;
    let mcm = is_mcm(m)?;
    let inclusion = expected.contains(&vk.ideal, budget)?;
    let equality = vk.ideal.equal(&expected, budget)?;
    r.insert("module_variety".into(), ideal(&vm));
    r.insert("variety".into(), ideal(&vk.ideal));
    r.insert("dimension".into(), json!(vk.dimension));
    r.insert("complexity".into(), json!(vk.complexity));
    r.insert("expected".into(), ideal(&expected));
    r.insert("module_mcm".into(), json!(mcm));
    r.insert("inclusion".into(), json!(inclusion));
    r.insert("equality".into(), json!(equality));
    let verdict = inclusion && (equality || !mcm);
    r.insert("verdict".into(), json!(verdict));
    let err =
        (cfg.verify && !verdict).then(|| Error::verification("cut_variety_mismatch", "V(K) differs from V(M) ∩ V(η)"));
    Ok((r, err, Some(k.to_text())))
}

fn realize_cmd(ring: &Ring, etas: &[String], cfg: &JobConfig) -> Result<Step> {
    let budget = ring.budget();
    let hs = etas.iter().map(|e| h_element(ring, e)).collect::<Result<Vec<_>>>()?;
    let out = realize(ring, &hs, None)?;
    let target = VarietyIdeal::new(ring.cohomology_ring(), hs)?;
    let mut r = Map::new();
    r.insert("target".into(), ideal(&target));
    let stages: Vec<Value> = out.stages.iter().map(|s| json!({ "gens": s.gen_degrees() })).collect();
    r.insert("stages".into(), Value::Array(stages));
    r.insert("module".into(), module_value(&out.module));
    let v = support_variety(&out.module, &cfg.variety())?;
    let matches = v.ideal.equal(&target, budget)?;
    let mcm = is_mcm(&out.module)?;
    r.insert("variety".into(), ideal(&v.ideal));
    r.insert("dimension".into(), json!(v.dimension));
    r.insert("complexity".into(), json!(v.complexity));
    r.insert("mcm".into(), json!(mcm));
    r.insert("matches".into(), json!(matches));
    let err = if cfg.verify && !matches {
        Some(Error::verification("realize_mismatch", "realized variety differs from the target"))
    } else if cfg.verify && !mcm {
        Some(Error::verification("not_mcm", "realized module is not MCM"))
    } else {
        None
    };
    Ok((r, err, Some(out.module.to_text())))
}

fn decompose_cmd(m: &ModulePresentation, cfg: &JobConfig) -> Result<Step> {
    let d = decompose(m, &cfg.decompose())?;
    let mut r = Map::new();
    r.insert("length".into(), json!(d.model.dim()));
    let hf: Vec<Value> = d.model.hilbert_function().iter().map(|(a, b)| json!([a, b])).collect();
    r.insert("hilbert_function".into(), Value::Array(hf));
    let summands: Vec<Value> = d
        .summands
        .iter()
        .map(|s| json!({ "length": s.basis.len(), "certified": s.certified, "module": module_value(&s.module) }))
        .collect();
    r.insert("summands".into(), Value::Array(summands));
    r.insert("certified".into(), json!(d.certified()));
    r.insert("possibly_decomposable".into(), json!(!d.certified()));
    let mut err = None;
    if cfg.verify {
        let steps = cfg.steps.unwrap_or(6);
        let sum = d.summands.iter().skip(1).fold(d.summands[0].module.clone(), |a, s| a.direct_sum(&s.module));
        let same = resolve_min(&sum, steps)?.betti() == resolve_min(m, steps)?.betti()
            && vector_model(&sum)?.dim() == d.model.dim();
        r.insert("round_trip".into(), json!(same));
        if !same {
            err = Some(Error::verification("decompose_mismatch", "summands do not reassemble the input"));
        }
    }
    Ok((r, err, None))
}

fn carlson_cmd(m: &ModulePresentation, a1: &str, a2: &str, cfg: &JobConfig) -> Result<Step> {
    let h = m.ring().cohomology_ring();
    let a1 = VarietyIdeal::parse(h, a1)?;
    let a2 = VarietyIdeal::parse(h, a2)?;
    let rep = check_carlson(m, &a1, &a2, &cfg.variety(), &cfg.decompose())?;
    let mut r = Map::new();
    r.insert("variety".into(), ideal(&rep.variety));
    r.insert("a1".into(), ideal(&a1));
    r.insert("a2".into(), ideal(&a2));
    let summands: Vec<Value> = rep
        .summands
        .iter()
        .map(|s| {
            json!({
                "group": s.group,
                "variety": ideal(&s.variety),
                "certified": s.certified,
                "module": module_value(&s.module),
            })
        })
        .collect();
    r.insert("summands".into(), Value::Array(summands));
    r.insert("c1".into(), rep.c1.as_ref().map_or(Value::Null, module_value));
    r.insert("c2".into(), rep.c2.as_ref().map_or(Value::Null, module_value));
    r.insert("v1".into(), ideal(&rep.v1));
    r.insert("v2".into(), ideal(&rep.v2));
    r.insert("verdict".into(), json!(rep.verdict));
    let err = (!rep.verdict).then(|| Error::verification("carlson_failed", "V(C_i) differs from V(a_i)"));
    Ok((r, err, None))
}

/// Runs one command on ring and module file contents.
pub fn execute(cmd: &Command, ring_text: &str, module_text: Option<&str>, cfg: &JobConfig) -> Outcome {
    let mut report = Map::new();
    report.insert("command".into(), json!(cmd.name()));
    let run = |report: &mut Map<String, Value>| -> Result<Step> {
        cfg.check()?;
        let ring = RingSpec::from_json(ring_text, cfg.budget)?;
        report.insert("ring".into(), ring_value(&ring));
        let module = match module_text {
            Some(t) => Some(present_module(t, &ring)?),
            None if cmd.needs_module() => {
                return Err(Error::input("missing_module", "this command needs a module file"))
            }
            None => None,
        };
        match cmd {
            Command::Validate => validate(module.as_ref()),
            Command::Resolve => resolve_cmd(module.as_ref().unwrap(), cfg),
            Command::Operators => operators_cmd(module.as_ref().unwrap(), cfg),
            Command::Variety => variety_cmd(module.as_ref().unwrap(), cfg),
            Command::Cut { eta } => cut_cmd(module.as_ref().unwrap(), eta, cfg),
            Command::Realize { etas } => realize_cmd(&ring, etas, cfg),
            Command::Decompose => decompose_cmd(module.as_ref().unwrap(), cfg),
            Command::CheckCarlson { a1, a2 } => carlson_cmd(module.as_ref().unwrap(), a1, a2, cfg),
        }
    };
    let (fields, error, module) = match run(&mut report) {
        Ok(step) => step,
        Err(e) => (Map::new(), Some(e), None),
    };
    report.insert("status".into(), json!(if error.is_some() { "error" } else { "ok" }));
    if let Some(e) = &error {
        report.insert("error".into(), error_value(e));
    }
    report.extend(fields);
    Outcome { report, error, module }
}
