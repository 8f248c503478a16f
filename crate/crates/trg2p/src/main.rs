use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use serde::Serialize;

use trg2p::lexicon::{self, Lexicon};
use trg2p::pipeline::{Engine, Options, WordResult};
use trg2p::prosody::{syllabify, Mode};

/// Turkish grapheme-to-phoneme converter: every parallel pronunciation of
/// each input token, one token per line.
#[derive(Parser)]
#[command(name = "trg2p", version)]
struct Cli {
    /// Input file with one token per line; stdin when absent.
    input: Option<PathBuf>,

    /// Plain phone strings, or stress and syllable marking for synthesis.
    #[arg(long, value_enum, default_value_t = CliMode::Asr)]
    mode: CliMode,

    /// Also emit optional pronunciation variants.
    #[arg(long)]
    variants: bool,

    /// Directory of lexicon data files overriding the built-in set.
    #[arg(long)]
    lexicon_dir: Option<PathBuf>,

    /// Output format.
    #[arg(long, value_enum, default_value_t = OutFormat::Tsv)]
    format: OutFormat,

    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum CliMode {
    Asr,
    Tts,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Tsv,
    Json,
}

#[derive(Serialize)]
struct JsonPron {
    pron: String,
    stress_syllable: Option<usize>,
    syllables: Vec<String>,
    source: &'static str,
    analysis_tags: String,
}

#[derive(Serialize)]
struct JsonWord<'a> {
    input: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    surface: Option<&'a str>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    prons: Vec<JsonPron>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<&'static str>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::from(2),
        Ok(false) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("trg2p: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<bool, String> {
    let loaded: Option<Lexicon> = match &cli.lexicon_dir {
        Some(dir) => Some(lexicon::load_lexicon(dir).map_err(|e| e.to_string())?),
        None => None,
    };
    let lex: &Lexicon = loaded.as_ref().unwrap_or_else(|| lexicon::embedded());

    let tokens = read_tokens(cli.input.as_deref()).map_err(|e| e.to_string())?;

    let opts = Options {
        mode: match cli.mode {
            CliMode::Asr => Mode::Asr,
            CliMode::Tts => Mode::Tts,
        },
        variants: cli.variants,
    };

    let engine = Engine::new(lex);
    let results = match cli.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| e.to_string())?
            .install(|| engine.run_batch(&tokens, &opts)),
        None => engine.run_batch(&tokens, &opts),
    };

    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut had_word_errors = false;
    for (token, result) in tokens.iter().zip(&results) {
        let line = match (cli.format, result) {
            (OutFormat::Tsv, Ok(w)) => tsv_line(token, w),
            (OutFormat::Tsv, Err(e)) => {
                had_word_errors = true;
                format!("{token}\tERROR:{}", e.code())
            }
            (OutFormat::Json, Ok(w)) => json_line(token, Some(w), None),
            (OutFormat::Json, Err(e)) => {
                had_word_errors = true;
                json_line(token, None, Some(e.code()))
            }
        };
        writeln!(out, "{line}").map_err(|e| e.to_string())?;
    }
    out.flush().map_err(|e| e.to_string())?;
    Ok(had_word_errors)
}

fn read_tokens(input: Option<&std::path::Path>) -> io::Result<Vec<String>> {
    let reader: Box<dyn BufRead> = match input {
        Some(path) => Box::new(BufReader::new(File::open(path)?)),
        None => Box::new(BufReader::new(io::stdin())),
    };
    let mut tokens = Vec::new();
    for line in reader.lines() {
        let line = line?;
        let token = line.trim();
        if !token.is_empty() {
            tokens.push(token.to_string());
        }
    }
    Ok(tokens)
}

fn tsv_line(token: &str, w: &WordResult) -> String {
    let prons: Vec<&str> = w.prons.iter().map(|p| p.rendered.as_str()).collect();
    format!("{token}\t{}", prons.join(";"))
}

fn json_line(token: &str, w: Option<&WordResult>, error: Option<&'static str>) -> String {
    let word = JsonWord {
        input: token,
        surface: w.map(|w| w.surface.as_str()),
        prons: w
            .map(|w| {
                w.prons
                    .iter()
                    .map(|p| {
                        let syl = syllabify(&p.pron).expect("rendered prons syllabify");
                        JsonPron {
                            pron: p.rendered.clone(),
                            stress_syllable: syl.stress_syllable,
                            syllables: syl
                                .syllables
                                .iter()
                                .map(|s| s.to_string())
                                .collect(),
                            source: p.source.as_str(),
                            analysis_tags: p.tag.clone(),
                        }
                    })
                    .collect()
            })
            .unwrap_or_default(),
        error,
    };
    serde_json::to_string(&word).expect("output structs serialize")
}
