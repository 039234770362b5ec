use clap::{Args, ValueEnum};

use hypodom::families::{
    self, circulant, complete, complete_minus_perfect_matching, cycle, extr1_spec, extr2_spec, path,
};
use hypodom::io::parse_graph6;
use hypodom::{CirculantSpec, Error, Graph};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// C(t(2k+1)-1, {1..k}); needs --k and --t.
    Extr1,
    /// C(8k+5, {1..k} u {3k+2..4k+2}); needs --k.
    Extr2,
    /// C(n, {1..k}) with (2k+1) | (n-1); --n for one order, else all n <= --max-n.
    Extremall,
    Cycle,
    Path,
    Complete,
    /// K_n minus a perfect matching; n even.
    Kminusm,
    /// Corona of --base.
    Corona,
    /// Identify vertex --u of --base with vertex --v of --other.
    Coalescence,
    /// C(n, S) with S from --connections.
    Circulant,
    Bull,
}

#[derive(Args)]
pub struct GenArgs {
    #[arg(value_enum)]
    family: Family,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long, default_value_t = 25)]
    max_n: usize,
    /// Comma-separated connection set for `circulant`.
    #[arg(long, value_delimiter = ',')]
    connections: Vec<usize>,
    /// graph6 of the base graph for `corona` and `coalescence`.
    #[arg(long)]
    base: Option<String>,
    #[arg(long)]
    other: Option<String>,
    #[arg(long, default_value_t = 0)]
    u: usize,
    #[arg(long, default_value_t = 0)]
    v: usize,
}

fn need(value: Option<usize>, flag: &str) -> Result<usize, Error> {
    value.ok_or_else(|| Error::InvalidParameter(format!("--{flag} is required")))
}

fn graph_arg(value: &Option<String>, flag: &str) -> Result<Graph, Error> {
    parse_graph6(
        value
            .as_deref()
            .ok_or_else(|| Error::InvalidParameter(format!("--{flag} is required")))?,
    )
}

pub fn generate(a: &GenArgs) -> Result<Vec<Graph>, Error> {
    Ok(match a.family {
        Family::Extr1 => vec![circulant(&extr1_spec(need(a.k, "k")?, need(a.t, "t")?)?)],
        Family::Extr2 => vec![circulant(&extr2_spec(need(a.k, "k")?)?)],
        Family::Extremall => {
            let k = need(a.k, "k")?;
            let orders: Vec<usize> = match a.n {
                Some(n) => vec![n],
                None => (2 * k + 2..=a.max_n).filter(|n| (n - 1) % (2 * k + 1) == 0).collect(),
            };
            orders
                .into_iter()
                .map(|n| CirculantSpec::consecutive(n, k).map(|s| circulant(&s)))
                .collect::<Result<_, _>>()?
        }
        Family::Cycle => {
            let n = need(a.n, "n")?;
            if n < 3 {
                return Err(Error::InvalidParameter("a cycle needs n >= 3".into()));
            }
            vec![cycle(n)]
        }
        Family::Path => vec![path(need(a.n, "n")?)],
        Family::Complete => vec![complete(need(a.n, "n")?)],
        Family::Kminusm => vec![complete_minus_perfect_matching(need(a.n, "n")?)?],
        Family::Corona => vec![graph_arg(&a.base, "base")?.corona()],
        Family::Coalescence => {
            let g = graph_arg(&a.base, "base")?;
            let h = graph_arg(&a.other, "other")?;
            vec![g.coalescence(a.u, &h, a.v)?]
        }
        Family::Circulant => vec![circulant(&CirculantSpec::new(need(a.n, "n")?, a.connections.clone())?)],
        Family::Bull => vec![families::bull()],
    })
}
