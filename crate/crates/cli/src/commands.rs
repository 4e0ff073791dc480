use std::io::Read;
use std::path::Path;

use dbhom::binary2;
use dbhom::construct::{algorithm_aa, constant_positions, enumerate_family, enumerate_family_with_base, ConstructionPlan};
use dbhom::homo::{count_property_d, lift_cycle_decomposition, lift_sequence, parse_kernel, parse_kernel_spec, Kernel};
use dbhom::oracle::{self, VerificationReport};
use dbhom::render::{parse_symbols, render};
use dbhom::{Alphabet, Cycle, Symbol};
use serde_json::{json, Map, Value};

use crate::output::{Failure, Out, Record};
use crate::{Binary2Args, Cli, Command, Emit, EnumerateArgs, GenerateArgs, KernelAction, KernelArgs, VerifyArgs};

type Result<T> = std::result::Result<T, Failure>;

pub fn dispatch(cli: &Cli, stdin: &mut dyn Read, out: &mut Out<'_>) -> Result<i32> {
    match &cli.command {
        Command::Generate(args) => generate(cli, args, out),
        Command::Enumerate(args) => enumerate(cli, args, out),
        Command::Verify(args) => verify(cli, args, stdin, out),
        Command::Binary2(args) => binary2_cmd(cli, args, stdin, out),
        Command::Kernel(args) => kernel(cli, args, out),
    }
}

fn need<T: Copy>(value: Option<T>, flag: &str) -> Result<T> {
    value.ok_or_else(|| Failure::Invalid(format!("{flag} is required")))
}

fn alphabet(cli: &Cli) -> Result<Alphabet> {
    Ok(Alphabet::new(need(cli.q, "--q")?)?)
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

fn read_stdin(stdin: &mut dyn Read) -> Result<String> {
    let mut text = String::new();
    stdin.read_to_string(&mut text)?;
    Ok(text)
}

fn base_cycle(cli: &Cli, alphabet: Alphabet) -> Result<Option<Cycle>> {
    cli.base_file
        .as_deref()
        .map(|path| Ok(Cycle::parse(alphabet, &read_file(path)?)?))
        .transpose()
}

/// A per-level list: comma-separated, or bare digits when `q <= 10`.
fn parse_list(alphabet: Alphabet, text: &str) -> Result<Vec<Symbol>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    Ok(parse_symbols(alphabet, text)?)
}

fn plan_params(alphabet: Alphabet, plan: &ConstructionPlan) -> Map<String, Value> {
    let mut p = Map::new();
    p.insert("q".into(), json!(alphabet.size()));
    p.insert("n".into(), json!(plan.n()));
    p.insert("B".into(), json!(plan.betas()));
    p.insert("L".into(), json!(plan.lambdas()));
    p.insert("I".into(), json!(plan.starts()));
    p
}

fn make_plan(cli: &Cli, alphabet: Alphabet, n: usize, args: &GenerateArgs) -> Result<ConstructionPlan> {
    let betas = parse_list(alphabet, &args.betas)?;
    let lambdas = parse_list(alphabet, &args.lambdas)?;
    let starts = parse_list(alphabet, &args.starts)?;
    Ok(match base_cycle(cli, alphabet)? {
        Some(base) => ConstructionPlan::with_base(alphabet, base, n, betas, lambdas, starts)?,
        None => ConstructionPlan::new(alphabet, n, betas, lambdas, starts)?,
    })
}

fn generate(cli: &Cli, args: &GenerateArgs, out: &mut Out<'_>) -> Result<i32> {
    let alphabet = alphabet(cli)?;
    let n = need(cli.n, "--n")?;
    let plan = make_plan(cli, alphabet, n, args)?;
    let cycle = algorithm_aa(&plan)?;
    let mut record = Record::new("generate", plan_params(alphabet, &plan));
    let text = cycle.render(alphabet);
    record.lines.push(text.clone());
    record.sequence = Some(text);
    record.report.insert("length".into(), json!(cycle.len()));
    if args.positions {
        let positions = constant_positions(&plan)?;
        let mut table = Map::new();
        for (g, pos) in positions {
            record.lines.push(format!("gamma={g} pos={pos}"));
            table.insert(g.to_string(), json!(pos.get()));
        }
        record.report.insert("positions".into(), Value::Object(table));
    }
    out.emit(record)?;
    Ok(0)
}

fn enumerate(cli: &Cli, args: &EnumerateArgs, out: &mut Out<'_>) -> Result<i32> {
    let alphabet = alphabet(cli)?;
    let n = need(cli.n, "--n")?;
    let family = match base_cycle(cli, alphabet)? {
        Some(base) => enumerate_family_with_base(alphabet, base, n, args.limit)?,
        None => enumerate_family(alphabet, n, args.limit)?,
    };
    let mut failed = false;
    for item in family {
        let (plan, cycle) = item?;
        let text = cycle.render(alphabet);
        let mut record = Record::new("enumerate", plan_params(alphabet, &plan));
        let mut line = format!("{plan}\t{text}");
        if args.verify {
            let ok = oracle::is_de_bruijn(cycle.symbols(), alphabet, n).ok;
            failed |= !ok;
            line.push_str(if ok { "\tOK" } else { "\tFAIL" });
            record.report.insert("ok".into(), json!(ok));
        }
        record.lines.push(line);
        record.sequence = Some(text);
        out.emit(record)?;
    }
    Ok(if failed { 1 } else { 0 })
}

fn report_lines(report: &VerificationReport, alphabet: Alphabet) -> Vec<String> {
    let violation = match &report.first_violation {
        Some((index, word)) => format!("{index}:{}", render(alphabet, word)),
        None => "none".into(),
    };
    vec![
        format!("ok={}", report.ok),
        format!("order={}", report.order),
        format!("alphabet={}", report.alphabet),
        format!("length={}", report.length),
        format!("missing_windows={}", report.missing_windows),
        format!("duplicate_windows={}", report.duplicate_windows),
        format!("first_violation={violation}"),
    ]
}

fn report_json(report: &VerificationReport, alphabet: Alphabet) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("ok".into(), json!(report.ok));
    m.insert("order".into(), json!(report.order));
    m.insert("alphabet".into(), json!(report.alphabet));
    m.insert("length".into(), json!(report.length));
    m.insert("missing_windows".into(), json!(report.missing_windows));
    m.insert("duplicate_windows".into(), json!(report.duplicate_windows));
    m.insert(
        "first_violation".into(),
        match &report.first_violation {
            Some((index, word)) => json!({ "index": index.get(), "word": render(alphabet, word) }),
            None => Value::Null,
        },
    );
    m
}

fn verify(cli: &Cli, args: &VerifyArgs, stdin: &mut dyn Read, out: &mut Out<'_>) -> Result<i32> {
    let alphabet = alphabet(cli)?;
    let n = need(cli.n, "--n")?;
    let text = match (&args.sequence, &args.file) {
        (_, Some(path)) => read_file(path)?,
        (Some(s), None) if s == "-" => read_stdin(stdin)?,
        (Some(s), None) => s.clone(),
        (None, None) => return Err(Failure::Invalid("give a sequence, `-` or --file".into())),
    };
    let symbols = parse_symbols(alphabet, &text)?;
    let report = oracle::is_de_bruijn(&symbols, alphabet, n);
    let mut params = Map::new();
    params.insert("q".into(), json!(alphabet.size()));
    params.insert("n".into(), json!(n));
    let mut record = Record::new("verify", params);
    record.sequence = Some(render(alphabet, &symbols));
    record.lines = report_lines(&report, alphabet);
    record.report = report_json(&report, alphabet);
    out.emit(record)?;
    Ok(if report.ok { 0 } else { 1 })
}

fn binary2_cmd(cli: &Cli, args: &Binary2Args, stdin: &mut dyn Read, out: &mut Out<'_>) -> Result<i32> {
    if cli.q.is_some_and(|q| q != 2) {
        return Err(Failure::Invalid("binary2 works over q=2 only".into()));
    }
    let alphabet = Alphabet::binary();
    let text = if args.base == "-" { read_stdin(stdin)? } else { args.base.clone() };
    let base = Cycle::parse(alphabet, &text)?;
    let rejected = |e: dbhom::Error| match e {
        dbhom::Error::NotDeBruijn { .. } => Failure::Rejected(format!("base is not a binary De Bruijn sequence: {e}")),
        other => Failure::Library(other),
    };
    let report = binary2::fixed_seed(&base).map_err(rejected)?;
    let mut params = Map::new();
    params.insert("base".into(), json!(base.render(alphabet)));
    params.insert("emit".into(), json!(format!("{:?}", args.emit).to_lowercase()));
    let mut record = Record::new("binary2", params);
    record.report.insert("n".into(), json!(report.n));
    record.report.insert("n_mod2".into(), json!(report.n_mod2));
    record.report.insert("a".into(), json!(report.a));
    record.report.insert("seed".into(), json!(render(alphabet, &report.seed)));
    record.report.insert("lengths".into(), json!(report.cycle_lengths));
    let sequence = match args.emit {
        Emit::Report => None,
        Emit::Short => Some(binary2::decompose_d2(&base)?.0),
        Emit::Long => Some(binary2::decompose_d2(&base)?.1),
        Emit::Joined => Some(binary2::join_d2(&base)?),
    };
    match sequence {
        Some(c) => {
            let text = c.render(alphabet);
            record.lines.push(text.clone());
            record.sequence = Some(text);
        }
        None => {
            let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
            record.lines = vec![
                format!("n={}", report.n),
                format!("n_mod2={}", report.n_mod2),
                format!("a={},{},{}", report.a[0], report.a[1], report.a[2]),
                format!("seed={}", render(alphabet, &report.seed)),
                format!("lengths={}", join(&report.cycle_lengths)),
            ];
        }
    }
    out.emit(record)?;
    Ok(0)
}

fn load_kernel(args: &KernelArgs) -> Result<Option<Kernel>> {
    Ok(match (&args.file, &args.linear) {
        (Some(path), _) => Some(parse_kernel(&read_file(path)?)?),
        (None, Some(spec)) => Some(parse_kernel_spec(spec)?),
        (None, None) => None,
    })
}

fn kernel(cli: &Cli, args: &KernelArgs, out: &mut Out<'_>) -> Result<i32> {
    let loaded = load_kernel(args)?;
    if let (Some(k), Some(q)) = (&loaded, cli.q) {
        if k.alphabet().size() != q {
            return Err(Failure::Invalid(format!("--q {q} disagrees with the kernel's q={}", k.alphabet())));
        }
    }
    let mut params = Map::new();
    params.insert("action".into(), json!(format!("{:?}", args.action).to_lowercase()));
    match args.action {
        KernelAction::Count => {
            let (alphabet, k) = match &loaded {
                Some(kernel) => (kernel.alphabet(), kernel.k()),
                None => (alphabet(cli)?, need(args.k, "--k")?),
            };
            let count = count_property_d(alphabet, k)?;
            params.insert("q".into(), json!(alphabet.size()));
            params.insert("k".into(), json!(k));
            let mut record = Record::new("kernel", params);
            record.lines.push(count.to_string());
            record.report.insert("count".into(), json!(count.to_string()));
            out.emit(record)?;
            Ok(0)
        }
        KernelAction::Check => {
            let kernel = loaded.ok_or_else(|| Failure::Invalid("check needs --file or --linear".into()))?;
            let verdict = kernel.is_property_d();
            params.insert("q".into(), json!(kernel.alphabet().size()));
            params.insert("k".into(), json!(kernel.k()));
            let mut record = Record::new("kernel", params);
            record.lines.push(format!("property_D={verdict}"));
            record.report.insert("property_D".into(), json!(verdict));
            out.emit(record)?;
            Ok(if verdict { 0 } else { 1 })
        }
        KernelAction::Lift => {
            let kernel = loaded.ok_or_else(|| Failure::Invalid("lift needs --file or --linear".into()))?;
            let alphabet = kernel.alphabet();
            let base_text = args.base.as_deref().ok_or_else(|| Failure::Invalid("lift needs --base".into()))?;
            let base = Cycle::parse(alphabet, base_text)?;
            let order = match cli.n {
                Some(n) => n,
                None => (1..=base.len())
                    .find(|&n| base.is_vertex_disjoint(alphabet, n))
                    .ok_or(dbhom::Error::NotVertexDisjoint(base.len()))?,
            };
            params.insert("q".into(), json!(alphabet.size()));
            params.insert("k".into(), json!(kernel.k()));
            params.insert("base".into(), json!(base.render(alphabet)));
            params.insert("n".into(), json!(order));
            let mut record = Record::new("kernel", params);
            if let Some(seed) = &args.seed {
                let seed = parse_symbols(alphabet, seed)?;
                let lifted = lift_sequence(&kernel, base.symbols(), &seed)?;
                let text = render(alphabet, &lifted);
                record.lines.push(format!("lift={text}"));
                record.sequence = Some(text);
            }
            let dec = lift_cycle_decomposition(&kernel, &base, order)?;
            let cycles: Vec<String> = dec.cycles().iter().map(|c| c.render(alphabet)).collect();
            let lengths: Vec<String> = dec.lengths().iter().map(|l| l.to_string()).collect();
            let map: Vec<String> = dec
                .seed_map()
                .pairs()
                .map(|(s, t)| format!("{}->{}", render(alphabet, &s), render(alphabet, &t)))
                .collect();
            record.lines.extend(cycles.iter().map(|c| format!("cycle={c}")));
            record.lines.push(format!("lengths={}", lengths.join(",")));
            record.lines.push(format!("seed_map={}", map.join(" ")));
            record.report.insert("cycles".into(), json!(cycles));
            record.report.insert("lengths".into(), json!(dec.lengths()));
            record.report.insert("seed_map".into(), json!(map));
            out.emit(record)?;
            Ok(0)
        }
    }
}
