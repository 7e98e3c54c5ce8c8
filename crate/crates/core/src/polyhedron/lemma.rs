use std::collections::BTreeSet;

use serde::Serialize;

use super::CountVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "=")]
    Equal,
    #[serde(rename = ">=")]
    AtLeast,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub id: String,
    pub statement: String,
    pub lhs: i128,
    pub relation: Relation,
    pub rhs: i128,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma2Report {
    pub pass: bool,
    pub checks: Vec<IdentityCheck>,
}

impl Lemma2Report {
    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// Euler, partition and double-count identities for a count vector, plus the
/// cusp inequality when `noncompact` is set.
pub fn check_lemma2(c: &CountVector, noncompact: bool) -> Lemma2Report {
    let n = |x: u64| x as i128;
    let vt = |a, b, cc| n(c.vt(a, b, cc));
    let em = |m| n(c.em(m));
    let mut checks = Vec::new();
    let mut push = |id: &str, statement: &str, lhs: i128, relation: Relation, rhs: i128| {
        let pass = match relation {
            Relation::Equal => lhs == rhs,
            Relation::AtLeast => lhs >= rhs,
        };
        checks.push(IdentityCheck { id: id.into(), statement: statement.into(), lhs, relation, rhs, pass });
    };

    push("(3)", "v - e + f = 2", n(c.v) - n(c.e) + n(c.f), Relation::Equal, 2);
    let triples: i128 = c.v_triple.values().map(|&x| n(x)).sum();
    push("(4)", "v = v2222 + sum of v_abc", n(c.v), Relation::Equal, n(c.v2222) + triples);
    push("(5)", "e = sum of e_m", n(c.e), Relation::Equal, c.e_m.values().map(|&x| n(x)).sum());

    let v22n_ge3: i128 = c.v_triple.iter().filter(|(t, _)| t[0] == 2 && t[1] == 2 && t[2] >= 3).map(|(_, &x)| n(x)).sum();
    push(
        "(6)",
        "2e2 = 4v2222 + 3v222 + 2(sum v22n, n>=3) + v233 + v234 + v235 + v236 + v244",
        2 * em(2),
        Relation::Equal,
        4 * n(c.v2222) + 3 * vt(2, 2, 2) + 2 * v22n_ge3 + vt(2, 3, 3) + vt(2, 3, 4) + vt(2, 3, 5) + vt(2, 3, 6) + vt(2, 4, 4),
    );
    push(
        "(7)",
        "2e3 = 3v333 + 2v233 + v223 + v234 + v235 + v236",
        2 * em(3),
        Relation::Equal,
        3 * vt(3, 3, 3) + 2 * vt(2, 3, 3) + vt(2, 2, 3) + vt(2, 3, 4) + vt(2, 3, 5) + vt(2, 3, 6),
    );
    push("(8)", "2e4 = 2v244 + v224 + v234", 2 * em(4), Relation::Equal, 2 * vt(2, 4, 4) + vt(2, 2, 4) + vt(2, 3, 4));
    push("(9)", "2e5 = v225 + v235", 2 * em(5), Relation::Equal, vt(2, 2, 5) + vt(2, 3, 5));
    push("(10)", "2e6 = v226 + v236", 2 * em(6), Relation::Equal, vt(2, 2, 6) + vt(2, 3, 6));

    let mut big: BTreeSet<u32> = c.e_m.keys().copied().filter(|&m| m >= 7).collect();
    big.extend(c.v_triple.keys().filter(|t| t[0] == 2 && t[1] == 2 && t[2] >= 7).map(|t| t[2]));
    for m in big {
        push(&format!("(11) n={m}"), &format!("2e{m} = v22{m}"), 2 * em(m), Relation::Equal, vt(2, 2, m));
    }
    if noncompact {
        push(
            "(12)",
            "v2222 + v236 + v244 + v333 >= 1",
            n(c.v2222) + vt(2, 3, 6) + vt(2, 4, 4) + vt(3, 3, 3),
            Relation::AtLeast,
            1,
        );
    }
    let pass = checks.iter().all(|c| c.pass);
    Lemma2Report { pass, checks }
}
