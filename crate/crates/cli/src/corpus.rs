//! Built-in example scripts with their expected values.

use chowcalc::Verification;
use serde_json::Value;

use crate::report::report;
use crate::runner::{run_script, Input, ScriptRun};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Golden {
    Str(&'static str),
    Int(i64),
    Bool(bool),
}

impl Golden {
    fn value(self) -> Value {
        match self {
            Golden::Str(s) => Value::from(s),
            Golden::Int(n) => Value::from(n),
            Golden::Bool(b) => Value::from(b),
        }
    }
}

/// Expected value at a JSON pointer inside the payload of one query.
#[derive(Debug, Clone, Copy)]
pub struct Expect {
    pub query: usize,
    pub pointer: &'static str,
    pub value: Golden,
}

const fn at(query: usize, pointer: &'static str, value: Golden) -> Expect {
    Expect {
        query,
        pointer,
        value,
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Example {
    pub name: &'static str,
    pub summary: &'static str,
    pub script: &'static str,
    pub expect: &'static [Expect],
}

use Golden::{Bool, Int, Str};

pub const EXAMPLES: &[Example] = &[
    Example {
        name: "surf-a",
        summary: "O + O(2) on the plane: big, not ample",
        script: "\
base P2
let E = O + O(2h)
coh 2h
segre E
nd E
check surface-big E with gg=true h0=7 h1detinv=0
check segre-big E with gg=true
",
        expect: &[
            at(0, "/h/0", Str("6")),
            at(1, "/segre_top", Str("4")),
            at(1, "/classes/s2/h^2", Str("4")),
            at(2, "/numerical_dimension", Int(3)),
            at(3, "/outcome", Str("BIG")),
            at(3, "/segre_top", Str("4")),
            at(3, "/audit/2/provided", Str("7")),
            at(3, "/kodaira_iitaka", Int(3)),
            at(4, "/outcome", Str("BIG")),
        ],
    },
    Example {
        name: "surf-b",
        summary: "O + O(C + bf) on F_e at e = 1, b = 2",
        script: "\
base F1
let E = O + O(C + 2f)
coh C + 2f
check surface-big E with gg=true h0=6 h1detinv=0
",
        expect: &[
            at(0, "/h/0", Str("5")),
            at(1, "/outcome", Str("BIG")),
            at(1, "/audit/2/provided", Str("6")),
            at(1, "/audit/3/satisfied", Bool(true)),
        ],
    },
    Example {
        name: "surf-c",
        summary: "extension data A = 2C + 3f, B = C + 5f on F_1 at (e, b, k) = (1, 8, 11)",
        script: "\
base F1
chi 2C + 3f
chi C + 5f
coh C - 2f
let E = O(2C + 3f) + O(C + 5f)
chern E
check surface-big E with gg=true h0=20 h1detinv=0
",
        expect: &[
            at(0, "/chi", Str("9")),
            at(1, "/chi", Str("11")),
            at(2, "/h/1", Str("3")),
            at(3, "/classes/c1/C", Str("3")),
            at(3, "/classes/c1/f", Str("8")),
            at(4, "/outcome", Str("BIG")),
            at(4, "/audit/2/provided", Str("20")),
        ],
    },
    Example {
        name: "surf-e-pattern",
        summary: "A + A^-1 on F_1: positive top Segre class without global generation",
        script: "\
base F1
let E = twist(O + O(-2C - 4f), C + 2f)
segre E
check surface-big E with h0=5 h1detinv=0
check segre-big E with gg=false
check twist-big E with ample_L=true h0_twist=1
",
        expect: &[
            at(0, "/segre_top", Str("3")),
            at(1, "/outcome", Str("INCONCLUSIVE")),
            at(1, "/audit/1/satisfied", Bool(false)),
            at(2, "/outcome", Str("INCONCLUSIVE")),
            at(3, "/outcome", Str("BIG")),
            at(3, "/route", Str("twist-big")),
        ],
    },
    Example {
        name: "fourfold-tangent",
        summary: "tangent bundle of P4",
        script: "\
base P4
segre T
check fano-tangent T with h0=24
check fourfold-big T with mu=true
",
        expect: &[
            at(0, "/segre_top", Str("70")),
            at(1, "/outcome", Str("BIG")),
            at(1, "/segre_top", Str("70")),
            at(2, "/outcome", Str("BIG")),
            at(2, "/kodaira_iitaka", Int(7)),
        ],
    },
    Example {
        name: "fourfold-twisted-tangent",
        summary: "O(1) + T(-1) on P4: the kernel bundle has the Chern data of the dual",
        script: "\
base P4
let E = O(h) + twist(T, -h)
chern E
segre E
chern dual(E)
check fourfold-big E with gg=true h0=10 q0=0 hidetinv=0 h3dualtwist=0 mu=false
check twist-big E with ample_L=true h0_twist=1
",
        expect: &[
            at(0, "/rank", Int(5)),
            at(0, "/classes/c1/h", Str("2")),
            at(0, "/classes/c4/h^4", Str("2")),
            at(1, "/classes/s1/h", Str("-2")),
            at(1, "/classes/s4/h^4", Str("2")),
            at(2, "/classes/c1/h", Str("-2")),
            at(2, "/classes/c2/h^2", Str("2")),
            at(3, "/outcome", Str("INCONCLUSIVE")),
            at(3, "/audit/6/provided", Str("false")),
            at(4, "/outcome", Str("BIG")),
        ],
    },
];

pub fn find(name: &str) -> Option<&'static Example> {
    EXAMPLES.iter().find(|e| e.name == name)
}

pub fn names() -> Vec<&'static str> {
    EXAMPLES.iter().map(|e| e.name).collect()
}

/// Result of replaying one example against its goldens.
#[derive(Debug, Clone)]
pub struct Replay {
    pub example: &'static Example,
    pub run: ScriptRun,
    pub mismatches: Vec<String>,
}

impl Replay {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn replay(example: &'static Example) -> Replay {
    let run = run_script(
        &Input::inline(example.name, example.script),
        Verification::Compute,
    );
    let json = report(&run);
    let mut mismatches = Vec::new();
    for err in json["errors"].as_array().into_iter().flatten() {
        mismatches.push(format!("{}: unexpected error {err}", example.name));
    }
    for e in example.expect {
        let q = &json["queries"][e.query];
        let got = q["payload"].pointer(e.pointer);
        let want = e.value.value();
        if got != Some(&want) {
            let got = got.map_or_else(|| "nothing".to_string(), Value::to_string);
            mismatches.push(format!(
                "{}: query {} ({}) {}: expected {want}, got {got}",
                example.name,
                e.query + 1,
                q["query"].as_str().unwrap_or("?"),
                e.pointer,
            ));
        }
    }
    Replay {
        example,
        run,
        mismatches,
    }
}

pub fn replay_all() -> Vec<Replay> {
    EXAMPLES.iter().map(replay).collect()
}
