//! Certificate that no `UW(7, 5)` exists.
//!
//! Any `UW(7, 5)` can be brought to a form whose first four rows are
//!
//! ```text
//! 1 1 1 1 1 0 0
//! 1 a b 0 0 1 1
//! 1 0 0 c d f g
//! 0 0 1 h k m n
//! ```
//!
//! Orthogonality of the pairs other than rows 3 and 4 reads
//! `1+a+b = 1+c+d = 1+h+k = 1+f+g = b̄+m+n = 0`. A vanishing sum of three
//! unimodular numbers is a rotated triple of cube roots, so `a, c, f, h` are
//! primitive cube roots with conjugate partners and `{m, n} = {1, ā}`. Every
//! remaining assignment makes `h c̄ + k d̄ + m f̄ + n ḡ` a sum of four cube roots
//! of unity, which is never zero.

use std::fmt;

use serde::Serialize;

use super::orth::m_orth_solutions;
use crate::arith::CycloNumber;

/// Roots are indices into `ζ_12`.
pub const CERT_ORDER: u32 = 12;

const TEMPLATE: [[&str; 7]; 4] = [
    ["1", "1", "1", "1", "1", "0", "0"],
    ["1", "a", "b", "0", "0", "1", "1"],
    ["1", "0", "0", "c", "d", "f", "g"],
    ["0", "0", "1", "h", "k", "m", "n"],
];

const EQUATIONS: [&str; 6] = [
    "1 + a + b = 0",
    "1 + c + d = 0",
    "1 + h + k = 0",
    "1 + f + g = 0",
    "conj(b) + m + n = 0",
    "h conj(c) + k conj(d) + m conj(f) + n conj(g) = 0",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum CertVerdict {
    Unsat,
    Sat,
}

/// Values a variable may take, read off one equation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Domain {
    pub variable: char,
    /// The variable fixed alongside it, written as a function of it.
    pub partner: String,
    pub equation: String,
    pub values: Vec<u32>,
}

/// One point of the residual search space and the equation it violates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckedAssignment {
    pub a: u32,
    pub c: u32,
    pub f: u32,
    pub h: u32,
    pub m: u32,
    pub n: u32,
    pub violated: String,
    /// Value of the violated expression, over `ζ_12`.
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RefutationCertificate {
    pub order: u32,
    pub template: Vec<Vec<String>>,
    pub equations: Vec<String>,
    pub domains: Vec<Domain>,
    pub assignments: Vec<CheckedAssignment>,
    pub verdict: CertVerdict,
}

fn root(k: u32) -> CycloNumber {
    CycloNumber::root(CERT_ORDER, k as i64).expect("order is positive")
}

fn conj(k: u32) -> u32 {
    (CERT_ORDER - k % CERT_ORDER) % CERT_ORDER
}

fn sum(terms: &[u32]) -> CycloNumber {
    terms.iter().fold(
        CycloNumber::zero(CERT_ORDER).expect("order is positive"),
        |acc, &k| acc.try_add(&root(k)).expect("same order"),
    )
}

/// Second values `b` of solutions to `1 + a + b = 0`, keyed by `a`.
fn unit_triples() -> Vec<(u32, u32)> {
    m_orth_solutions(3, CERT_ORDER)
        .expect("order is positive")
        .into_iter()
        .filter(|t| t.values[0] == 0)
        .map(|t| (t.values[1], t.values[2]))
        .collect()
}

/// `(m, n)` with `conj(b) + m + n = 0`.
fn mn_solutions(b: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for m in 0..CERT_ORDER {
        for n in 0..CERT_ORDER {
            if sum(&[conj(b), m, n]).is_zero() {
                out.push((m, n));
            }
        }
    }
    out
}

/// `h c̄ + k d̄ + m f̄ + n ḡ` as root indices, with `d = c̄`, `g = f̄`, `k = h̄`.
fn last_terms(x: &CheckedAssignment) -> [u32; 4] {
    let l = CERT_ORDER;
    let (d, g, k) = (conj(x.c), conj(x.f), conj(x.h));
    [
        (x.h + conj(x.c)) % l,
        (k + conj(d)) % l,
        (x.m + conj(x.f)) % l,
        (x.n + conj(g)) % l,
    ]
}

fn residual(x: &CheckedAssignment) -> CycloNumber {
    sum(&last_terms(x))
}

/// Runs the refutation and returns its certificate.
pub fn uw75_refute() -> RefutationCertificate {
    let triples = unit_triples();
    let primitive: Vec<u32> = triples.iter().map(|&(a, _)| a).collect();
    let partner_ok = triples.iter().all(|&(a, b)| b == conj(a));
    debug_assert!(partner_ok);

    let mut domains = Vec::new();
    for (v, p, eq) in [('a', 'b', 0), ('c', 'd', 1), ('h', 'k', 2), ('f', 'g', 3)] {
        domains.push(Domain {
            variable: v,
            partner: format!("{p} = conj({v})"),
            equation: EQUATIONS[eq].to_string(),
            values: primitive.clone(),
        });
    }
    let mut mn_values: Vec<u32> = Vec::new();
    for &a in &primitive {
        for (m, n) in mn_solutions(conj(a)) {
            mn_values.extend([m, n]);
        }
    }
    mn_values.sort_unstable();
    mn_values.dedup();
    domains.push(Domain {
        variable: 'm',
        partner: "n, with {m, n} = {1, conj(a)}".into(),
        equation: EQUATIONS[4].to_string(),
        values: mn_values,
    });

    let mut assignments = Vec::new();
    for &a in &primitive {
        for &c in &primitive {
            for &f in &primitive {
                for &h in &primitive {
                    for (m, n) in mn_solutions(conj(a)) {
                        let mut x = CheckedAssignment {
                            a,
                            c,
                            f,
                            h,
                            m,
                            n,
                            violated: EQUATIONS[5].to_string(),
                            residual: String::new(),
                        };
                        x.residual = residual(&x).to_string();
                        assignments.push(x);
                    }
                }
            }
        }
    }
    let verdict = if assignments.iter().all(|x| !residual(x).is_zero()) {
        CertVerdict::Unsat
    } else {
        CertVerdict::Sat
    };
    RefutationCertificate {
        order: CERT_ORDER,
        template: TEMPLATE
            .iter()
            .map(|r| r.iter().map(|s| s.to_string()).collect())
            .collect(),
        equations: EQUATIONS.iter().map(|s| s.to_string()).collect(),
        domains,
        assignments,
        verdict,
    }
}

impl RefutationCertificate {
    /// Re-checks everything exactly: the domains solve their equations and
    /// nothing else does, the assignments cover the whole residual space, the
    /// first five equations hold at each assignment and the last never does.
    pub fn verify(&self) -> bool {
        if self.verdict != CertVerdict::Unsat || self.order != CERT_ORDER {
            return false;
        }
        let triples = unit_triples();
        let cube = [4u32, 8];
        let domains_ok = self.domains.len() == 5
            && self.domains[..4].iter().all(|d| d.values == cube)
            && triples.len() == 2
            && triples
                .iter()
                .all(|&(a, b)| cube.contains(&a) && b == conj(a));
        if !domains_ok {
            return false;
        }
        let mut expected = Vec::new();
        for a in cube {
            for c in cube {
                for f in cube {
                    for h in cube {
                        for mn in mn_solutions(conj(a)) {
                            expected.push((a, c, f, h, mn));
                        }
                    }
                }
            }
        }
        let mut seen: Vec<_> = self
            .assignments
            .iter()
            .map(|x| (x.a, x.c, x.f, x.h, (x.m, x.n)))
            .collect();
        seen.sort_unstable();
        seen.dedup();
        expected.sort_unstable();
        if seen != expected || self.assignments.len() != expected.len() {
            return false;
        }
        self.assignments.iter().all(|x| {
            let (b, d, g, k) = (conj(x.a), conj(x.c), conj(x.f), conj(x.h));
            let earlier = [
                sum(&[0, x.a, b]),
                sum(&[0, x.c, d]),
                sum(&[0, x.h, k]),
                sum(&[0, x.f, g]),
                sum(&[conj(b), x.m, x.n]),
            ];
            let thirds = last_terms(x).iter().all(|t| t % 4 == 0);
            earlier.iter().all(CycloNumber::is_zero)
                && thirds
                && !residual(x).is_zero()
                && residual(x).to_string() == x.residual
        })
    }
}

fn root_name(k: u32) -> String {
    match k {
        0 => "1".into(),
        _ => format!("z{k}"),
    }
}

impl fmt::Display for RefutationCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "forced rows:")?;
        for row in &self.template {
            writeln!(f, "  {}", row.join(" "))?;
        }
        writeln!(f, "equations:")?;
        for e in &self.equations {
            writeln!(f, "  {e}")?;
        }
        writeln!(f, "domains (z = exp(2 pi i / {})):", self.order)?;
        for d in &self.domains {
            let vals: Vec<String> = d.values.iter().map(|&k| root_name(k)).collect();
            writeln!(
                f,
                "  {} in {{{}}}; {}  [from {}]",
                d.variable,
                vals.join(", "),
                d.partner,
                d.equation
            )?;
        }
        writeln!(f, "assignments checked: {}", self.assignments.len())?;
        for x in &self.assignments {
            writeln!(
                f,
                "  a={} c={} f={} h={} m={} n={}: rows 3,4 inner product = {} != 0",
                root_name(x.a),
                root_name(x.c),
                root_name(x.f),
                root_name(x.h),
                root_name(x.m),
                root_name(x.n),
                x.residual
            )?;
        }
        let v = match self.verdict {
            CertVerdict::Unsat => "UNSAT",
            CertVerdict::Sat => "SAT",
        };
        write!(f, "verdict: {v}")
    }
}
