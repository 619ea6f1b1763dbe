//! Command-line grammar.
//!
//! Each leaf command names the statements it realizes as `[label]` tokens in
//! its long help; the labels are listed in `statements.rs`.

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "homquiver",
    version,
    about = "Exact Hochschild and cyclic homology of truncated quiver algebras",
    long_about = "Exact Hochschild and cyclic homology of truncated quiver algebras kΓ/𝔪ᴺ, the Taft \
algebras Λₙ and their Auslander algebras, with Grothendieck-ring products and Chern characters.\n\n\
Output is deterministic JSON tagged \"schema\": \"homquiver/1\".\n\
Exit codes: 0 success, 2 invalid configuration, 3 engine disagreement or failed check, \
4 oracle dimension cap exceeded (set HOMQUIVER_DIM_CAP or --dim-cap to raise it)."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Hochschild homology table HH_{p,q} of a truncated quiver algebra.
    #[command(long_about = "Hochschild homology table HH_{p,q} of kΓ/𝔪ᴺ, bigraded by homological degree p \
and path length q.\n\n\
Realizes:\n  \
[hh-truncated] for N ≥ 2, HH_{p,q} is read off the numbers a_q of cycle classes and b_r of primitive \
cycle orbits, with the kernel and cokernel of multiplication by N/(N∧r) on k.\n  \
[hh-semisimple] for N = 1, HH is kΓ₀ concentrated in degree 0.\n  \
[hh-path-algebra] for N = 0, the two-term resolution of kΓ gives HH₀ = k·(vertices and cycle classes), \
HH₁ = k·(cycle classes) and HH_p = 0 for p ≥ 2.\n\n\
The oracle engine computes the same table from the normalized bar complex relative to kΓ₀.")]
    Hh(HhArgs),

    /// Cyclic homology HC_m of a truncated quiver algebra in characteristic 0.
    #[command(long_about = "Cyclic homology of kΓ/𝔪ᴺ over a field containing ℚ, graded by path length.\n\n\
Realizes:\n  \
[hc-sbi] the graded SBI sequence splits in positive internal degree, so \
dim HH_{m,q} = dim HC_{m,q} + dim HC_{m−1,q} for q > 0, while HC_{2c,0} = kΓ₀.\n  \
[hc-path-and-semisimple] HC_{2c}(kΓ/𝔪) = kΓ₀ and the odd degrees vanish; HC_0(kΓ) is spanned by the \
vertices and the cycle orbits, HC_{2c}(kΓ) = kΓ₀ for c ≥ 1 and the odd degrees vanish.\n  \
[hc-truncated] for N ≥ 2 the dimensions follow from the cycle counts through the same sequence.\n\n\
Prime-field coefficients are rejected (exit 2). The oracle engine computes the total complex of the \
cyclic bicomplex relative to kΓ₀.")]
    Hc(HcArgs),

    /// Auslander algebra Γ of the Taft algebra Λₙ.
    #[command(long_about = "The Auslander algebra Γ = End(⊕ N_{i,u})ᵒᵖ of Λₙ, presented by its quiver and \
relations and cross-checked against the endomorphism algebra computed from modules.\n\n\
Realizes:\n  \
[auslander-quiver] Γ has n² vertices (i,u) with arrows α_{i,u}: (i,u)→(i,u+1) and β_{i,u}: (i,u)→(i+1,u), \
bound by anticommuting squares and zero triangles.\n  \
[auslander-ext] Ext²(S_{i,i}, −) = 0, Ext²(S_{i,i−j}, S_{i−1,i−j−1}) = k and Ext^p = 0 for p ≥ 3.\n  \
[happel-resolution] the bimodule resolution of Γ has generators R₀ on the vertices, R₁ on the arrows, \
R₂ on the n² − n relations and nothing above.\n  \
[gamma-homology] HH_0(Γ) = k^{n²}, HH_p(Γ) = 0 for p > 0, and HC_{2c}(Γ) = k^{n²}, HC_{2c+1}(Γ) = 0.\n\n\
--compare is available for --emit hh and --emit hc.")]
    Auslander(AuslanderArgs),

    /// Products in the Grothendieck ring of Λₙ.
    #[command(long_about = "Products of classes of indecomposable Λₙ-modules.\n\n\
Realizes:\n  \
[k0-product] N_a ⊗ N_b decomposes by an explicit formula in the start and length of the two \
uniserial factors: below the wrap-around point it is a sum of uniserials, past it projectives split off.\n\n\
Classes are written like \"2*P[0] + P[1]\" (projective with top j) or \"P[i,u]\" / \"N[i,u]\" \
(uniserial from i to u). The oracle engine decomposes the tensor product of explicit modules over ℚ(ζₙ).")]
    K0(K0Args),

    /// Chern character of a class in the Grothendieck ring.
    #[command(long_about = "Chern character ch_{0,p} of a Grothendieck-ring class in the σ-basis of HC_{2p}.\n\n\
Realizes:\n  \
[chern-character] ch_{0,p}[P_j] = σ_jᵖ, where σ_jᵖ = (y_p e_j^{⊗2p+1}, z_p e_j^{⊗2p}, …, y_0 e_j) with \
y_p = (−1)ᵖ(2p)!/p! and z_p = −y_p/2.\n  \
[chern-tensor] for projectives L_1, …, L_r (r ≥ 2), ch_{0,p}[L_1 ⊗ … ⊗ L_r] = (1/n²) ∏ dim L_i \
(σ_0ᵖ, …, σ_{n−1}ᵖ).\n\n\
With several expressions the tensor product of the factors is decomposed and its class is reported \
together with the predicted value.")]
    Chern(ChernArgs),

    /// Independent checks of the structural statements.
    Verify {
        #[command(subcommand)]
        check: VerifyCommand,
    },
}

#[derive(Subcommand, Debug)]
pub enum VerifyCommand {
    /// Hopf algebra axioms of Λₙ over ℚ(ζₙ).
    #[command(long_about = "Checks the Hopf algebra axioms of Λₙ over ℚ(ζₙ) on every basis element.\n\n\
Realizes:\n  \
[taft-hopf] Λₙ is a Hopf algebra with Δ(e_i) = Σ_j e_j ⊗ e_{i−j}, \
Δ(a_i) = Σ_j (e_j ⊗ a_{i−j} + ζ^{i−j} a_j ⊗ e_{i−j}), ε(e_i) = δ_{i,0}, ε(a_i) = 0, S(e_i) = e_{−i} and \
S(a_i) = −ζ^{i+1} a_{−i−1}.")]
    Hopf {
        #[arg(long)]
        n: usize,
    },

    /// Whether σᵖ on a vertex idempotent is a cycle of the cyclic bicomplex.
    #[command(long_about = "Builds σᵖ(e_v) in the total complex of the cyclic bicomplex of Λₙ or Γ and \
checks that it is a cycle.\n\n\
Realizes:\n  \
[sigma-cycles] σᵖ(e_v) is a cycle for every vertex v, and for Λₙ the classes σ_0ᵖ, …, σ_{n−1}ᵖ form a \
basis of HC_{2p}(Λₙ).\n\n\
--coeffs overrides (y_p, z_p, …, y_1, z_1, y_0), for negative controls. \
--rank additionally computes the rank of the classes of all vertices.")]
    Sigma {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long, value_enum, default_value_t = Target::Taft)]
        target: Target,
        /// Vertex `j` for Λₙ or `i,u` for Γ.
        #[arg(long, default_value = "0")]
        vertex: String,
        /// Comma-separated coefficients replacing the σ coefficients.
        #[arg(long, allow_hyphen_values = true)]
        coeffs: Option<String>,
        #[arg(long)]
        rank: bool,
    },

    /// Closed-form HH against the bar-complex oracle on a fixed instance set.
    #[command(long_about = "Compares the closed-form Hochschild table with the bar-complex oracle on crown(n) \
with N = n for n ∈ {2,3}, crown(2) with N = 3, one loop with N ∈ {2,3,4} and two loops with N = 2, over ℚ, 𝔽₂ and 𝔽₃.\n\n\
Realizes:\n  \
[hh-taft] HH_{0,0}(Λₙ) = kⁿ and HH_{p,cn}(Λₙ) = k^{n−1} for p ∈ {2c−1, 2c}, zero otherwise.")]
    HhOracle {
        #[arg(long, default_value_t = 4)]
        max_p: usize,
        #[arg(long, default_value_t = 6)]
        max_q: usize,
    },

    /// Closed-form HC against the cyclic-bicomplex oracle on a fixed instance set.
    #[command(long_about = "Compares the closed-form cyclic homology with the cyclic-bicomplex oracle on Λ₂, \
Λ₃ (degrees ≤ 4) and crown(2) with N = 3 (degrees ≤ 3), over ℚ.\n\n\
Realizes:\n  \
[hc-taft] HC_{2c}(Λₙ) = kⁿ and HC_{2c+1}(Λₙ) = k^{n−1} for all c ≥ 0.")]
    HcOracle,

    /// Resolutions of simple Γ-modules against their predicted shape.
    #[command(long_about = "Builds Γ for the given n, checks the presentation against the endomorphism \
algebra, and compares every minimal projective resolution of a simple module with its predicted shape.\n\n\
Realizes:\n  \
[auslander-resolutions] S_{i,i} has a length-one resolution by P_{i−1,i} → P_{i,i}; S_{i,i−1} has \
P_{i−1,i−2} → P_{i,i−2} → P_{i,i−1}; for 2 ≤ j ≤ n−1, S_{i,i−j} has \
P_{i−1,i−j−1} → P_{i−1,i−j} ⊕ P_{i,i−j−1} → P_{i,i−j}.")]
    Auslander {
        #[arg(long)]
        n: usize,
    },

    /// The product formula against the tensor-product oracle on all basis pairs.
    #[command(long_about = "Compares the product formula with the decomposition of explicit tensor \
products for every pair of indecomposables, and checks commutativity.\n\n\
Realizes:\n  \
[k0-commutative] the Grothendieck ring of Λₙ is commutative.")]
    K0 {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Taft,
    Auslander,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Quiver,
    Cartan,
    Resolutions,
    Ext,
    Happel,
    Hh,
    Hc,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum RingChoice {
    /// `P[j]` only → K₀(Λₙ); otherwise all indecomposables.
    Auto,
    Lambda,
    Gamma,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct EngineArgs {
    /// Use the brute-force oracle instead of the closed form.
    #[arg(long, conflicts_with = "compare")]
    pub oracle: bool,
    /// Run both engines and exit 3 on disagreement.
    #[arg(long)]
    pub compare: bool,
}

#[derive(Args, Debug)]
pub struct AlgebraArgs {
    /// `crown:n`, `loops:k`, or a JSON quiver file.
    #[arg(long)]
    pub quiver: String,
    /// Truncation N in kΓ/𝔪ᴺ; 0 is the path algebra.
    #[arg(long)]
    pub trunc: usize,
    /// `q`, `fp:<p>` or `cyc:<n>`.
    #[arg(long, default_value = "q")]
    pub field: String,
    /// Override the oracle dimension cap.
    #[arg(long)]
    pub dim_cap: Option<usize>,
}

#[derive(Args, Debug)]
pub struct HhArgs {
    #[command(flatten)]
    pub algebra: AlgebraArgs,
    #[arg(long, default_value_t = 4)]
    pub max_p: usize,
    #[arg(long, default_value_t = 6)]
    pub max_q: usize,
    #[command(flatten)]
    pub engine: EngineArgs,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct HcArgs {
    #[command(flatten)]
    pub algebra: AlgebraArgs,
    #[arg(long, default_value_t = 4)]
    pub max_deg: usize,
    /// Largest path length; defaults to a bound covering degrees ≤ max-deg.
    #[arg(long)]
    pub max_q: Option<usize>,
    #[command(flatten)]
    pub engine: EngineArgs,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct AuslanderArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = Emit::Quiver)]
    pub emit: Emit,
    /// Homological degree bound for --emit hh / hc.
    #[arg(long, default_value_t = 3)]
    pub max_deg: usize,
    /// Compare the closed form with the oracle (hh and hc only).
    #[arg(long)]
    pub compare: bool,
}

#[derive(Args, Debug)]
pub struct K0Args {
    #[arg(long)]
    pub n: usize,
    #[command(subcommand)]
    pub op: K0Op,
}

#[derive(Subcommand, Debug)]
pub enum K0Op {
    /// Product of two classes.
    Product {
        a: String,
        b: String,
        #[arg(long, value_enum, default_value_t = RingChoice::Auto)]
        ring: RingChoice,
        #[command(flatten)]
        engine: EngineArgs,
    },
}

#[derive(Args, Debug)]
pub struct ChernArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub p: usize,
    #[arg(long, value_enum, default_value_t = RingChoice::Auto)]
    pub ring: RingChoice,
    /// One class, or several factors of a tensor product.
    #[arg(required = true, num_args = 1..)]
    pub exprs: Vec<String>,
}
