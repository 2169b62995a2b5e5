//! A worked example corpus.
//!
//! The fixtures model one line of argument from the Alzheimer-disease
//! literature: Spilman et al.'s claim that rapamycin slows AD progression in
//! a transgenic mouse model, its backing in Harrison et al. and Hsia et al.,
//! a similarity group over rapamycin/mTOR claims, a BEL formalization of the
//! same interaction, annotation and challenge micropublications, and a
//! reconstruction of a self-citing claim network from the
//! citation-distortion literature on inclusion-body myositis (ids prefixed
//! `G-`).
//!
//! The same corpus ships with the CLI as MPJSON files under `fixtures/`.

use crate::anchoring::{AnnotationTarget, Selector};
use crate::ident::Id;
use crate::model::{
    Agent, Attribution, Corpus, GroupMarker, MediaDescriptor, Micropublication,
    RelationPredicate::{DirectlyChallenges, QualifiedBy, Supports},
    Representation,
};
use crate::network::{Network, SimilarityGroup};

const C1_TEXT: &str = "Rapamycin is an inhibitor of the mTOR pathway";
const C3_TEXT: &str = "Inhibition of mTOR by Rapamycin can slow or block AD progression in a transgenic mouse model of the disease.";
const C11_TEXT: &str = "PDAPP mice tend to have lower body temperatures, which may result in varying degrees of hypothermia during the MWM task, which can produce amnesia in animals.";

/// Agents referenced by the Spilman-line fixtures.
fn spilman_agents() -> Vec<Agent> {
    vec![
        Agent::person("PSpilman", "Patricia Spilman"),
        Agent::person("DHarrison", "David Harrison"),
        Agent::person("AHsia", "Albert Hsia"),
        Agent::person("JCurator", "J. Curator"),
        Agent::person("JHuang", "Shile Huang"),
        Agent::person("EBrown", "Eric Brown"),
        Agent::person("DSabatini", "David Sabatini"),
        Agent::person("DPratt", "Dexter Pratt"),
        Agent::person("ANeuroscientist", "A. Neuroscientist"),
        Agent::person("KBryan", "Kathryn Bryan"),
        Agent::person("KBCurator", "Knowledge Base Curator"),
    ]
}

fn greenberg_agents() -> Vec<Agent> {
    vec![
        Agent::person("MNeedham", "Merrilee Needham"),
        Agent::person("VAskanas", "Valerie Askanas"),
        Agent::person("SGreenberg", "Steven Greenberg"),
    ]
}

fn ref5() -> Representation {
    Representation::reference(
        "Ref5",
        "Harrison DE, et al. (2009) Rapamycin fed late in life extends lifespan in genetically heterogeneous mice. Nature 460:392-395.",
    )
}

fn d1() -> Representation {
    Representation::data(
        "D1",
        MediaDescriptor { kind: "image".into(), locator: "spilman-2010/figure1.png".into() },
    )
}

fn m1() -> Representation {
    Representation::new("M1", crate::model::RepresentationKind::Procedure)
        .with_text("Morris water maze protocol after 13 weeks of rapamycin-supplemented diet")
}

fn m2() -> Representation {
    Representation::new("M2", crate::model::RepresentationKind::Material)
        .with_text("Transgenic PDAPP (hAPP J20) mouse strain")
}

fn a_c3() -> Attribution {
    Attribution::new("A_C3", "PSpilman", "author")
}

/// A citable claim with its supporting reference, attribution and semantic
/// qualifiers.
pub fn mp1() -> Micropublication {
    let mut mp = Micropublication::new(
        "MP1",
        Attribution::new("A_MP1", "PSpilman", "curator").with_date("2013-05-21"),
    );
    let claim = Representation::statement("C1", C1_TEXT).with_source(AnnotationTarget {
        document_id: Id::from("doc:spilman-2010"),
        selectors: vec![
            Selector::TextQuote { exact: C1_TEXT.into(), prefix: None, suffix: None },
            Selector::TextPosition { start: 812, end: 857 },
        ],
    });
    mp.assert_element(claim).unwrap();
    mp.assert_element(ref5()).unwrap();
    mp.assert_element(Representation::semantic_qualifier("Q1", "CHEBI:9168")).unwrap();
    mp.assert_element(Representation::semantic_qualifier("Q2", "INO:0000736")).unwrap();
    mp.attribute(&Id::from("C1"), Attribution::new("A_C1", "PSpilman", "author")).unwrap();
    mp.set_claim("C1").unwrap();
    mp.add_edge("Ref5", "C1", Supports).unwrap();
    mp.add_edge("A_C1", "C1", Supports).unwrap();
    mp.add_edge("Q1", "C1", QualifiedBy).unwrap();
    mp.add_edge("Q2", "C1", QualifiedBy).unwrap();
    mp
}

/// The same claim backed by data and the methods that produced it.
pub fn mp2() -> Micropublication {
    let mut mp =
        Micropublication::new("MP2", Attribution::new("A_MP2", "PSpilman", "curator"));
    mp.assert_element(Representation::statement("C3", C3_TEXT)).unwrap();
    mp.assert_element(d1()).unwrap();
    mp.assert_element(m1()).unwrap();
    mp.assert_element(m2()).unwrap();
    mp.attribute(&Id::from("C3"), a_c3()).unwrap();
    mp.set_claim("C3").unwrap();
    mp.add_edge("A_C3", "C3", Supports).unwrap();
    mp.add_edge("D1", "C3", Supports).unwrap();
    mp.add_edge("M1", "D1", Supports).unwrap();
    mp.add_edge("M2", "D1", Supports).unwrap();
    mp
}

/// A digital abstract: the principal claim with every supporting statement,
/// datum, method and reference.
pub fn mp3() -> Micropublication {
    let mut mp =
        Micropublication::new("MP3", Attribution::new("A_MP3", "PSpilman", "curator"));
    mp.assert_element(Representation::statement("C3", C3_TEXT)).unwrap();
    mp.assert_element(Representation::statement(
        "S1",
        "Rapamycin, an inhibitor of the mTOR pathway, extends lifespan in genetically heterogeneous mice.",
    ))
    .unwrap();
    mp.assert_element(Representation::statement(
        "S2",
        "PDAPP mice accumulate soluble and deposited Abeta and develop AD-like synaptic deficits, cognitive impairment and hippocampal atrophy.",
    ))
    .unwrap();
    mp.assert_element(Representation::statement(
        "S3",
        "Rapamycin-fed transgenic PDAPP mice showed improved learning and memory, restored to levels indistinguishable from non-transgenic controls.",
    ))
    .unwrap();
    mp.assert_element(d1()).unwrap();
    mp.assert_element(m1()).unwrap();
    mp.assert_element(m2()).unwrap();
    mp.assert_element(ref5()).unwrap();
    mp.assert_element(Representation::reference(
        "Ref9",
        "Games D, et al. (1995) Alzheimer-type neuropathology in transgenic mice overexpressing V717F beta-amyloid precursor protein. Nature 373:523-527.",
    ))
    .unwrap();
    mp.assert_element(Representation::reference(
        "Ref10",
        "Hsia AY, et al. (1999) Plaque-independent disruption of neural circuits in Alzheimer's disease mouse models. PNAS 96:3228-3233.",
    ))
    .unwrap();
    mp.attribute(&Id::from("C3"), a_c3()).unwrap();
    mp.set_claim("C3").unwrap();
    mp.add_edge("A_C3", "C3", Supports).unwrap();
    mp.add_edge("S1", "C3", Supports).unwrap();
    mp.add_edge("S2", "C3", Supports).unwrap();
    mp.add_edge("S3", "C3", Supports).unwrap();
    mp.add_edge("Ref5", "S1", Supports).unwrap();
    mp.add_edge("Ref9", "S2", Supports).unwrap();
    mp.add_edge("Ref10", "S2", Supports).unwrap();
    mp.add_edge("D1", "S3", Supports).unwrap();
    mp.add_edge("M1", "D1", Supports).unwrap();
    mp.add_edge("M2", "D1", Supports).unwrap();
    mp
}

/// The backing claim from the cited lifespan study, with its own evidence.
pub fn mp4() -> Micropublication {
    let mut mp =
        Micropublication::new("MP4", Attribution::new("A_MP4", "DHarrison", "author"));
    mp.assert_element(Representation::statement(
        "C1.1",
        "Rapamycin, an inhibitor of the mTOR pathway, fed late in life extends lifespan in genetically heterogeneous mice.",
    ))
    .unwrap();
    mp.assert_element(Representation::data(
        "D1.1",
        MediaDescriptor { kind: "image".into(), locator: "harrison-2009/figure2.png".into() },
    ))
    .unwrap();
    mp.assert_element(
        Representation::new("M1.1", crate::model::RepresentationKind::Method)
            .with_text("Longevity cohort feeding protocol with encapsulated rapamycin at 14 ppm"),
    )
    .unwrap();
    mp.set_claim("C1.1").unwrap();
    mp.add_edge("D1.1", "C1.1", Supports).unwrap();
    mp.add_edge("M1.1", "D1.1", Supports).unwrap();
    mp
}

/// The backing claim about the PDAPP mouse model.
pub fn mp5() -> Micropublication {
    let mut mp = Micropublication::new("MP5", Attribution::new("A_MP5", "AHsia", "author"));
    mp.assert_element(Representation::statement(
        "C2.1",
        "Addition of the Swedish FAD mutation to the APP transgene in a second line of mice further increased synaptic transmission deficits in young APP mice without plaques.",
    ))
    .unwrap();
    mp.assert_element(Representation::data(
        "D2.1",
        MediaDescriptor { kind: "image".into(), locator: "hsia-1999/figure3.png".into() },
    ))
    .unwrap();
    mp.assert_element(
        Representation::new("M2.1", crate::model::RepresentationKind::Method)
            .with_text("Hippocampal slice electrophysiology in young transgenic APP mice"),
    )
    .unwrap();
    mp.set_claim("C2.1").unwrap();
    mp.add_edge("D2.1", "C2.1", Supports).unwrap();
    mp.add_edge("M2.1", "D2.1", Supports).unwrap();
    mp
}

/// The resolution micropublication: it quotes statements from three
/// publications and asserts the new claim-level support edges connecting
/// them.
pub fn mp6() -> Micropublication {
    let mut mp =
        Micropublication::new("MP6", Attribution::new("A_MP6", "JCurator", "curator"));
    mp.quote_element("C3", Some(Id::from("MP3"))).unwrap();
    mp.quote_element("S1", Some(Id::from("MP3"))).unwrap();
    mp.quote_element("S2", Some(Id::from("MP3"))).unwrap();
    mp.quote_element("C1.1", Some(Id::from("MP4"))).unwrap();
    mp.quote_element("C2.1", Some(Id::from("MP5"))).unwrap();
    mp.set_claim("C3").unwrap();
    mp.add_edge("C1.1", "S1", Supports).unwrap();
    mp.add_edge("C2.1", "S2", Supports).unwrap();
    mp
}

/// The similarity group over the rapamycin/mTOR claims, holotype `C4`.
/// Structurally identical to what
/// [`Network::create_similarity_group`] registers.
pub fn mp7() -> Micropublication {
    let mut mp = Micropublication::new(
        "MP7",
        Attribution::new("A_MP7", "JCurator", "author, curator"),
    );
    mp.quote_element("C1.1", Some(Id::from("MP4"))).unwrap();
    mp.quote_element("C3", Some(Id::from("MP3"))).unwrap();
    mp.quote_element("C4", Some(Id::from("MP13"))).unwrap();
    mp.quote_element("C5", Some(Id::from("MP14"))).unwrap();
    mp.quote_element("C6", Some(Id::from("MP15"))).unwrap();
    mp.set_claim("C4").unwrap();
    mp.add_edge("C1.1", "C4", Supports).unwrap();
    mp.add_edge("C3", "C4", Supports).unwrap();
    mp.add_edge("C5", "C4", Supports).unwrap();
    mp.add_edge("C6", "C4", Supports).unwrap();
    mp.set_group(GroupMarker {
        holotype_id: Id::from("C4"),
        member_ids: ["C1.1", "C3", "C4", "C5", "C6"].into_iter().map(Id::from).collect(),
    });
    mp
}

/// A claim formalized in a biological expression language, supported at
/// document level only. The formal text is stored opaquely.
pub fn mp8() -> Micropublication {
    let mut mp = Micropublication::new(
        "MP8",
        Attribution::new("A_MP8", "DPratt", "curator").with_date("2013"),
    );
    mp.assert_element(Representation::statement("C7", "a(CHEBI:9168) =| kin(p(HGNC:FRAP1))"))
        .unwrap();
    mp.assert_element(Representation::reference("R96", "PMID:12030785")).unwrap();
    mp.attribute(&Id::from("C7"), Attribution::new("A_C7", "DPratt", "author").with_date("2013"))
        .unwrap();
    mp.set_claim("C7").unwrap();
    mp.add_edge("A_C7", "C7", Supports).unwrap();
    mp.add_edge("R96", "C7", Supports).unwrap();
    mp
}

/// The same formal claim with its backing resolved to statement level.
pub fn mp9() -> Micropublication {
    let mut mp = Micropublication::new("MP9", Attribution::new("A_MP9", "DPratt", "curator"));
    mp.quote_element("C7", Some(Id::from("MP8"))).unwrap();
    mp.assert_element(Representation::statement(
        "S4",
        "Rapamycin directly inhibits the kinase activity of mTOR.",
    ))
    .unwrap();
    mp.attribute(&Id::from("S4"), Attribution::new("A_S4", "JHuang", "author")).unwrap();
    mp.set_claim("C7").unwrap();
    mp.add_edge("S4", "C7", Supports).unwrap();
    mp.add_edge("A_S4", "S4", Supports).unwrap();
    mp
}

/// A reader's annotation, modeled as an ordinary micropublication supported
/// by the statement it discusses.
pub fn mp10() -> Micropublication {
    let mut mp = Micropublication::new(
        "MP10",
        Attribution::new("A_MP10", "ANeuroscientist", "author"),
    );
    mp.assert_element(Representation::statement(
        "C10",
        "The Spilman result suggests mTOR inhibitors merit investigation as therapeutic agents for human Alzheimer disease.",
    ))
    .unwrap();
    mp.attribute(&Id::from("C10"), Attribution::new("A_C10", "ANeuroscientist", "author"))
        .unwrap();
    mp.quote_element("C1", Some(Id::from("MP1"))).unwrap();
    mp.set_claim("C10").unwrap();
    mp.add_edge("A_C10", "C10", Supports).unwrap();
    mp.add_edge("C1", "C10", Supports).unwrap();
    mp
}

/// A challenge made inside a publication: the review's claim directly
/// challenges the interpretation statement S3 of the modeled article.
pub fn mp11() -> Micropublication {
    let mut mp =
        Micropublication::new("MP11", Attribution::new("A_MP11", "KBryan", "curator"));
    mp.assert_element(Representation::statement("C11", C11_TEXT)).unwrap();
    mp.assert_element(Representation::reference(
        "R48",
        "Iivonen H, et al. (2003) Hypothermia in mice tested in the Morris water maze. Behav Brain Res 141:207-213.",
    ))
    .unwrap();
    mp.assert_element(Representation::reference(
        "R49",
        "Rauch TM, et al. (1989) Hypothermia impairs performance in the Morris water maze. Physiol Behav 46:315-320.",
    ))
    .unwrap();
    mp.assert_element(Representation::reference(
        "R50",
        "Panakhova E, et al. (1984) The effect of hypothermia on the rat's spatial memory in the water tank task. Behav Neural Biol 42:191-196.",
    ))
    .unwrap();
    mp.attribute(&Id::from("C11"), Attribution::new("A_C11", "KBryan", "author")).unwrap();
    mp.quote_element("S3", Some(Id::from("MP3"))).unwrap();
    mp.set_claim("C11").unwrap();
    mp.add_edge("A_C11", "C11", Supports).unwrap();
    mp.add_edge("R48", "C11", Supports).unwrap();
    mp.add_edge("R49", "C11", Supports).unwrap();
    mp.add_edge("R50", "C11", Supports).unwrap();
    mp.add_edge("C11", "S3", DirectlyChallenges).unwrap();
    mp
}

/// Third-party annotation of a conflict between two publications. Both
/// challenge endpoints are quoted; the challenge edge is asserted here.
pub fn mp12() -> Micropublication {
    let mut mp =
        Micropublication::new("MP12", Attribution::new("A_MP12", "KBCurator", "curator"));
    mp.assert_element(Representation::statement(
        "C12",
        "Bryan et al. claim that PDAPP mice tend to have lower body temperatures, which may result in hypothermia during the MWM task and produce amnesia. This challenges the reliance on PDAPP mice as an AD model by Spilman et al.",
    ))
    .unwrap();
    mp.attribute(&Id::from("C12"), Attribution::new("A_C12", "KBCurator", "curator")).unwrap();
    mp.quote_element("S3", Some(Id::from("MP3"))).unwrap();
    mp.quote_element("C11", Some(Id::from("MP11"))).unwrap();
    mp.set_claim("C12").unwrap();
    mp.add_edge("A_C12", "C12", Supports).unwrap();
    mp.add_edge("S3", "C12", Supports).unwrap();
    mp.add_edge("C11", "C12", Supports).unwrap();
    mp.add_edge("C11", "S3", DirectlyChallenges).unwrap();
    mp
}

/// Source publication of similarity-group member `C4`.
pub fn mp13() -> Micropublication {
    let mut mp = Micropublication::new("MP13", Attribution::new("A_MP13", "JHuang", "author"));
    mp.assert_element(Representation::statement(
        "C4",
        "Rapamycin is a specific inhibitor of the mTOR kinase.",
    ))
    .unwrap();
    mp.attribute(&Id::from("C4"), Attribution::new("A_C4", "JHuang", "author")).unwrap();
    mp.set_claim("C4").unwrap();
    mp.add_edge("A_C4", "C4", Supports).unwrap();
    mp
}

/// Source publication of similarity-group member `C5`.
pub fn mp14() -> Micropublication {
    let mut mp = Micropublication::new("MP14", Attribution::new("A_MP14", "EBrown", "author"));
    mp.assert_element(Representation::statement(
        "C5",
        "The immunosuppressant rapamycin blocks mTOR signalling downstream of growth factor receptors.",
    ))
    .unwrap();
    mp.attribute(&Id::from("C5"), Attribution::new("A_C5", "EBrown", "author")).unwrap();
    mp.set_claim("C5").unwrap();
    mp.add_edge("A_C5", "C5", Supports).unwrap();
    mp
}

/// Source publication of similarity-group member `C6`, with primary
/// evidence.
pub fn mp15() -> Micropublication {
    let mut mp =
        Micropublication::new("MP15", Attribution::new("A_MP15", "DSabatini", "author"));
    mp.assert_element(Representation::statement(
        "C6",
        "RAFT1, the mammalian target of rapamycin, is a direct target of the rapamycin-FKBP12 complex.",
    ))
    .unwrap();
    mp.assert_element(Representation::data(
        "D6",
        MediaDescriptor { kind: "image".into(), locator: "sabatini-1994/figure4.png".into() },
    ))
    .unwrap();
    mp.attribute(&Id::from("C6"), Attribution::new("A_C6", "DSabatini", "author")).unwrap();
    mp.set_claim("C6").unwrap();
    mp.add_edge("A_C6", "C6", Supports).unwrap();
    mp.add_edge("D6", "C6", Supports).unwrap();
    mp
}

fn builder(id: &str) -> Option<Micropublication> {
    Some(match id {
        "MP1" => mp1(),
        "MP2" => mp2(),
        "MP3" => mp3(),
        "MP4" => mp4(),
        "MP5" => mp5(),
        "MP6" => mp6(),
        "MP7" => mp7(),
        "MP8" => mp8(),
        "MP9" => mp9(),
        "MP10" => mp10(),
        "MP11" => mp11(),
        "MP12" => mp12(),
        "MP13" => mp13(),
        "MP14" => mp14(),
        "MP15" => mp15(),
        _ => return None,
    })
}

pub const ALL_FIXTURE_IDS: [&str; 15] = [
    "MP1", "MP2", "MP3", "MP4", "MP5", "MP6", "MP7", "MP8", "MP9", "MP10", "MP11", "MP12",
    "MP13", "MP14", "MP15",
];

/// A corpus holding the requested fixtures plus the agent registry.
pub fn corpus_of(ids: &[&str]) -> Corpus {
    let mut corpus = Corpus::new();
    for agent in spilman_agents() {
        corpus.register_agent(agent).unwrap();
    }
    for id in ids {
        corpus.insert(builder(id).unwrap_or_else(|| panic!("unknown fixture {id}"))).unwrap();
    }
    corpus
}

/// Every Spilman-line fixture.
pub fn base_corpus() -> Corpus {
    corpus_of(&ALL_FIXTURE_IDS)
}

/// The three-publication claim network plus its resolution
/// micropublication.
pub fn claim_network_corpus() -> Corpus {
    corpus_of(&["MP3", "MP4", "MP5", "MP6"])
}

/// The claim network plus the source publications of the similarity-group
/// members.
pub fn similarity_corpus() -> Corpus {
    corpus_of(&["MP3", "MP4", "MP5", "MP6", "MP13", "MP14", "MP15"])
}

/// Registers the `MP7` similarity group on a network merged from
/// [`similarity_corpus`].
pub fn register_similarity_group(net: &mut Network) -> (SimilarityGroup, Micropublication) {
    net.create_similarity_group(
        "MP7",
        ["C1.1", "C3", "C4", "C5", "C6"].into_iter().map(Id::from),
        "C4",
        Attribution::new("A_MP7", "JCurator", "author, curator"),
    )
    .expect("similarity corpus contains every member")
}

/// A reconstruction of a self-citing claim network: one review lab citing a
/// single laboratory's chain of mutually citing publications whose
/// foundational paper is a hypothesis without data, plus a sibling review
/// that dropped the hedging qualifier.
pub fn greenberg_corpus() -> Corpus {
    let mut corpus = Corpus::new();
    for agent in greenberg_agents() {
        corpus.register_agent(agent).unwrap();
    }

    // Review stating the claim with a hedging qualifier, citing only the
    // self-citing laboratory.
    let mp = corpus
        .new_micropublication("G-MP1", Attribution::new("A_GMP1", "MNeedham", "author"))
        .unwrap();
    mp.assert_element(Representation::statement(
        "G-C1",
        "The accumulation of APP and its fragments is often stated to precede other abnormalities in IBM muscle fibers.",
    ))
    .unwrap();
    mp.assert_element(Representation::semantic_qualifier("G-Q1", "is often stated to")).unwrap();
    mp.attribute(&Id::from("G-C1"), Attribution::new("G-A1", "MNeedham", "author")).unwrap();
    mp.quote_element("G-C3", Some(Id::from("G-MP3"))).unwrap();
    mp.quote_element("G-C4", Some(Id::from("G-MP4"))).unwrap();
    mp.set_claim("G-C1").unwrap();
    mp.add_edge("G-A1", "G-C1", Supports).unwrap();
    mp.add_edge("G-C3", "G-C1", Supports).unwrap();
    mp.add_edge("G-C4", "G-C1", Supports).unwrap();
    mp.add_edge("G-Q1", "G-C1", QualifiedBy).unwrap();

    // Sibling review: same authors, qualifier removed, no citation at all.
    let mp = corpus
        .new_micropublication("G-MP2", Attribution::new("A_GMP2", "MNeedham", "author"))
        .unwrap();
    mp.assert_element(Representation::statement(
        "G-C2",
        "The accumulation of APP and its fragments precedes other abnormalities in IBM muscle fibers.",
    ))
    .unwrap();
    mp.attribute(&Id::from("G-C2"), Attribution::new("G-A2", "MNeedham", "author")).unwrap();
    mp.set_claim("G-C2").unwrap();
    mp.add_edge("G-A2", "G-C2", Supports).unwrap();

    // The cited laboratory's review, citing its own earlier work.
    let mp = corpus
        .new_micropublication("G-MP3", Attribution::new("A_GMP3", "VAskanas", "author"))
        .unwrap();
    mp.assert_element(Representation::statement(
        "G-C3",
        "Amyloid-beta precursor protein accumulation is an early upstream event in the pathogenesis of sporadic inclusion-body myositis.",
    ))
    .unwrap();
    mp.attribute(&Id::from("G-C3"), Attribution::new("G-A3", "VAskanas", "author")).unwrap();
    mp.quote_element("G-C5", Some(Id::from("G-MP5"))).unwrap();
    mp.quote_element("G-C6", Some(Id::from("G-MP6"))).unwrap();
    mp.quote_element("G-C8", Some(Id::from("G-MP8"))).unwrap();
    mp.set_claim("G-C3").unwrap();
    mp.add_edge("G-A3", "G-C3", Supports).unwrap();
    mp.add_edge("G-C5", "G-C3", Supports).unwrap();
    mp.add_edge("G-C6", "G-C3", Supports).unwrap();
    mp.add_edge("G-C8", "G-C3", Supports).unwrap();

    let mp = corpus
        .new_micropublication("G-MP4", Attribution::new("A_GMP4", "VAskanas", "author"))
        .unwrap();
    mp.assert_element(Representation::statement(
        "G-C4",
        "Overexpression of beta-APP in normal muscle fibers reproduces aspects of the IBM phenotype.",
    ))
    .unwrap();
    mp.attribute(&Id::from("G-C4"), Attribution::new("G-A4", "VAskanas", "author")).unwrap();
    mp.quote_element("G-C5", Some(Id::from("G-MP5"))).unwrap();
    mp.set_claim("G-C4").unwrap();
    mp.add_edge("G-A4", "G-C4", Supports).unwrap();
    mp.add_edge("G-C5", "G-C4", Supports).unwrap();

    let mp = corpus
        .new_micropublication("G-MP5", Attribution::new("A_GMP5", "VAskanas", "author"))
        .unwrap();
    mp.assert_element(Representation::statement(
        "G-C5",
        "Beta-APP mRNA and protein are increased in IBM muscle fibers.",
    ))
    .unwrap();
    mp.attribute(&Id::from("G-C5"), Attribution::new("G-A5", "VAskanas", "author")).unwrap();
    mp.quote_element("G-C7", Some(Id::from("G-MP7"))).unwrap();
    mp.set_claim("G-C5").unwrap();
    mp.add_edge("G-A5", "G-C5", Supports).unwrap();
    mp.add_edge("G-C7", "G-C5", Supports).unwrap();

    let mp = corpus
        .new_micropublication("G-MP6", Attribution::new("A_GMP6", "VAskanas", "author"))
        .unwrap();
    mp.assert_element(Representation::statement(
        "G-C6",
        "Twisted tubulofilaments in IBM fibers immunoreact with antibodies against beta-APP epitopes.",
    ))
    .unwrap();
    mp.attribute(&Id::from("G-C6"), Attribution::new("G-A6", "VAskanas", "author")).unwrap();
    mp.quote_element("G-C7", Some(Id::from("G-MP7"))).unwrap();
    mp.set_claim("G-C6").unwrap();
    mp.add_edge("G-A6", "G-C6", Supports).unwrap();
    mp.add_edge("G-C7", "G-C6", Supports).unwrap();

    // The foundational publication: a hypothesis, no data.
    let mp = corpus
        .new_micropublication("G-MP7", Attribution::new("A_GMP7", "VAskanas", "author"))
        .unwrap();
    mp.assert_element(Representation::statement(
        "G-C7",
        "We hypothesize that beta-APP deposition may play a role in the pathogenesis of inclusion-body myositis.",
    ))
    .unwrap();
    mp.assert_element(Representation::reference(
        "G-R7",
        "Glenner GG, Wong CW (1984) Alzheimer's disease: initial report of the purification and characterization of a novel cerebrovascular amyloid protein. BBRC 120:885-890.",
    ))
    .unwrap();
    mp.attribute(&Id::from("G-C7"), Attribution::new("G-A7", "VAskanas", "author")).unwrap();
    mp.set_claim("G-C7").unwrap();
    mp.add_edge("G-A7", "G-C7", Supports).unwrap();
    mp.add_edge("G-R7", "G-C7", Supports).unwrap();

    let mp = corpus
        .new_micropublication("G-MP8", Attribution::new("A_GMP8", "VAskanas", "author"))
        .unwrap();
    mp.assert_element(Representation::statement(
        "G-C8",
        "Beta-APP gene transfer into cultured human muscle fibers induces IBM-like vacuolar degeneration.",
    ))
    .unwrap();
    mp.attribute(&Id::from("G-C8"), Attribution::new("G-A8", "VAskanas", "author")).unwrap();
    mp.quote_element("G-C7", Some(Id::from("G-MP7"))).unwrap();
    mp.set_claim("G-C8").unwrap();
    mp.add_edge("G-A8", "G-C8", Supports).unwrap();
    mp.add_edge("G-C7", "G-C8", Supports).unwrap();

    // The auditor's similarity assertion: the hedged claim is the holotype
    // for its qualifier-free copy.
    let mut mp = Micropublication::new(
        "G-MP9",
        Attribution::new("A_GMP9", "SGreenberg", "curator"),
    );
    mp.quote_element("G-C1", Some(Id::from("G-MP1"))).unwrap();
    mp.quote_element("G-C2", Some(Id::from("G-MP2"))).unwrap();
    mp.set_claim("G-C1").unwrap();
    mp.add_edge("G-C2", "G-C1", Supports).unwrap();
    mp.set_group(GroupMarker {
        holotype_id: Id::from("G-C1"),
        member_ids: ["G-C1", "G-C2"].into_iter().map(Id::from).collect(),
    });
    corpus.insert(mp).unwrap();

    corpus
}
