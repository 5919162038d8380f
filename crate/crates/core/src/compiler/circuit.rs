use std::fmt;
use std::str::FromStr;

use nalgebra::Matrix4;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fermion::ChainSpec;

/// Sorted set of occupied quasiparticle modes, written `[]`, `[0]`, `[1,2]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExcitationSet(Vec<usize>);

impl ExcitationSet {
    pub fn new(mut modes: Vec<usize>) -> Result<Self> {
        modes.sort_unstable();
        if modes.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Parse(format!("duplicate mode in excitation set {modes:?}")));
        }
        Ok(Self(modes))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn modes(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, mode: usize) -> bool {
        self.0.binary_search(&mode).is_ok()
    }

    pub fn check_bound(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&m) if m >= n => Err(Error::IndexOutOfRange { index: m, bound: n }),
            _ => Ok(()),
        }
    }

    /// All `2ⁿ` subsets of `{0..n−1}`, ordered by size then lexicographically.
    pub fn all(n: usize) -> Vec<Self> {
        let mut sets: Vec<Self> = (0..1usize << n).map(|mask| Self((0..n).filter(|k| mask >> k & 1 == 1).collect())).collect();
        sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.0.cmp(&b.0)));
        sets
    }
}

impl fmt::Display for ExcitationSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for ExcitationSet {
    type Err = Error;

    /// Accepts `[1,2]`, `1,2` and `[]` / empty string.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')).unwrap_or(s);
        let modes = inner
            .split(',')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(|p| p.parse::<usize>().map_err(|_| Error::Parse(format!("bad excitation label {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(modes)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Gate {
    X {
        q: usize,
    },
    /// `diag(e^{−iβ/2}, e^{iβ/2})`.
    Rz {
        q: usize,
        beta: f64,
    },
    /// [`ryxxy_matrix`] on `(q, q+1)` with qubit `q` as the first tensor factor.
    Ryxxy {
        q: usize,
        alpha: f64,
    },
}

impl Gate {
    pub fn kind(&self) -> &'static str {
        match self {
            Gate::X { .. } => "X",
            Gate::Rz { .. } => "RZ",
            Gate::Ryxxy { .. } => "RYXXY",
        }
    }

    pub fn qubits(&self) -> Vec<usize> {
        match *self {
            Gate::X { q } | Gate::Rz { q, .. } => vec![q],
            Gate::Ryxxy { q, .. } => vec![q, q + 1],
        }
    }

    pub fn angle(&self) -> Option<f64> {
        match *self {
            Gate::X { .. } => None,
            Gate::Rz { beta, .. } => Some(beta),
            Gate::Ryxxy { alpha, .. } => Some(alpha),
        }
    }
}

/// `exp(−i(X⊗Y − Y⊗X)α/2)` in the basis `|00⟩, |01⟩, |10⟩, |11⟩` (first
/// tensor factor written first): identity on `|00⟩, |11⟩` and the rotation
/// `[[cos α, sin α], [−sin α, cos α]]` on `(|01⟩, |10⟩)`.
pub fn ryxxy_matrix(alpha: f64) -> Matrix4<Complex64> {
    let (s, c) = alpha.sin_cos();
    let one = Complex64::new(1.0, 0.0);
    let z = Complex64::default();
    let (c, s) = (Complex64::new(c, 0.0), Complex64::new(s, 0.0));
    Matrix4::new(
        one, z, z, z, //
        z, c, s, z, //
        z, -s, c, z, //
        z, z, z, one,
    )
}

/// Wraps an angle into `(−π, π]`.
pub fn wrap_angle(x: f64) -> f64 {
    use std::f64::consts::{PI, TAU};
    let r = x.rem_euclid(TAU);
    if r > PI {
        r - TAU
    } else {
        r
    }
}

/// Eigenstate-preparation circuit applied to `|0…0⟩`.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianCircuit {
    n_qubits: usize,
    gates: Vec<Gate>,
    excitation_set: ExcitationSet,
    spec: Option<ChainSpec>,
}

impl GaussianCircuit {
    pub fn new(n_qubits: usize, gates: Vec<Gate>, excitation_set: ExcitationSet, spec: Option<ChainSpec>) -> Result<Self> {
        excitation_set.check_bound(n_qubits)?;
        for g in &gates {
            let top = g.qubits().into_iter().max().unwrap_or(0);
            if top >= n_qubits {
                return Err(Error::IndexOutOfRange { index: top, bound: n_qubits });
            }
            if g.angle().is_some_and(|a| !a.is_finite()) {
                return Err(Error::Parse(format!("non-finite angle in {g:?}")));
            }
        }
        Ok(Self { n_qubits, gates, excitation_set, spec })
    }

    pub fn empty(n_qubits: usize) -> Self {
        Self { n_qubits, gates: Vec::new(), excitation_set: ExcitationSet::empty(), spec: None }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn excitation_set(&self) -> &ExcitationSet {
        &self.excitation_set
    }

    pub fn spec(&self) -> Option<&ChainSpec> {
        self.spec.as_ref()
    }

    pub fn ryxxy_angles(&self) -> Vec<f64> {
        self.gates
            .iter()
            .filter_map(|g| match g {
                Gate::Ryxxy { alpha, .. } => Some(*alpha),
                _ => None,
            })
            .collect()
    }

    pub fn ryxxy_layout(&self) -> Vec<usize> {
        self.gates
            .iter()
            .filter_map(|g| match g {
                Gate::Ryxxy { q, .. } => Some(*q),
                _ => None,
            })
            .collect()
    }

    pub fn count(&self, kind: &str) -> usize {
        self.gates.iter().filter(|g| g.kind() == kind).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&CircuitRecord::from(self)).expect("circuit serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let rec: CircuitRecord = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        rec.try_into()
    }

    /// One gate per line, angles in radians with 17 significant digits.
    pub fn to_text(&self) -> String {
        let mut out = format!("qubits {};\nlabel {};\n", self.n_qubits, self.excitation_set);
        for g in &self.gates {
            let line = match *g {
                Gate::X { q } => format!("x q[{q}];"),
                Gate::Rz { q, beta } => format!("rz({beta:.16e}) q[{q}];"),
                Gate::Ryxxy { q, alpha } => format!("ryxxy({alpha:.16e}) q[{q}],q[{}];", q + 1),
            };
            out.push_str(&line);
            out.push('\n');
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
struct GateRecord {
    kind: String,
    qubits: Vec<usize>,
    angle: Option<f64>,
}

#[derive(Serialize, Deserialize)]
struct CircuitRecord {
    n_qubits: usize,
    gates: Vec<GateRecord>,
    excitation_set: ExcitationSet,
    spec: Option<ChainSpec>,
}

impl From<&GaussianCircuit> for CircuitRecord {
    fn from(c: &GaussianCircuit) -> Self {
        Self {
            n_qubits: c.n_qubits,
            gates: c.gates.iter().map(|g| GateRecord { kind: g.kind().into(), qubits: g.qubits(), angle: g.angle() }).collect(),
            excitation_set: c.excitation_set.clone(),
            spec: c.spec.clone(),
        }
    }
}

impl TryFrom<CircuitRecord> for GaussianCircuit {
    type Error = Error;

    fn try_from(rec: CircuitRecord) -> Result<Self> {
        let gates = rec
            .gates
            .iter()
            .map(|g| {
                let angle = || g.angle.ok_or_else(|| Error::Parse(format!("{} gate needs an angle", g.kind)));
                match (g.kind.as_str(), g.qubits.as_slice()) {
                    ("X", &[q]) => Ok(Gate::X { q }),
                    ("RZ", &[q]) => Ok(Gate::Rz { q, beta: angle()? }),
                    ("RYXXY", &[q, p]) if p == q + 1 => Ok(Gate::Ryxxy { q, alpha: angle()? }),
                    _ => Err(Error::Parse(format!("bad gate {} on {:?}", g.kind, g.qubits))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        if let Some(spec) = &rec.spec {
            ChainSpec::new(spec.mu().to_vec(), spec.t().to_vec(), spec.delta().to_vec())?;
        }
        GaussianCircuit::new(rec.n_qubits, gates, rec.excitation_set, rec.spec)
    }
}
