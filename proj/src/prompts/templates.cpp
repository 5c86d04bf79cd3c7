#include "priorlens/prompts/templates.hpp"

#include <mutex>

#include "priorlens/common/errors.hpp"

namespace priorlens::prompts {

namespace {

const char* k_extraction_text = R"__PL__(You are tasked with extracting key information from a research paper 
for building a knowledge representation.
Paper title: {title}
Based on the paper content provided below, extract the following information:
- "methods": [List of methods/approaches proposed in the paper],
- "problems": [List of problems the paper addresses],
- "datasets": [List of datasets used for evaluation],
- "metrics": [List of evaluation metrics used],
- "results": [List of objects with 'metric' and 'value' fields 
  representing key quantitative results],
- "novelty_claims": [Claims about what is novel in this work]
Be precise and specific.
Paper content:
{abstract}
{introduction})__PL__";

const char* k_landscape_text = R"__PL__(# Research Landscape Analysis

## Task
Analyze the collection of research papers provided below to create a 
comprehensive map of the research landscape they represent. The submission 
paper is the focus of our analysis, and the related papers provide context.

## Input Format
You will be provided with structured information extracted from multiple 
research papers including:
- A submission paper that is the focus of our analysis
- Multiple related papers that form the research context

Each paper contains:
- methods: List of methods/approaches proposed
- problems: List of problems addressed
- datasets: List of datasets used
- metrics: List of evaluation metrics
- results: Key quantitative results
- novelty_claims: Claims about what is novel in the work

## Output Format
Provide a comprehensive analysis with the following sections:

1. METHODOLOGICAL LANDSCAPE
   - Identify and describe the main methodological approaches across the papers
   - Group similar or related methods into clusters
   - Highlight methodological trends or patterns
   - Describe relationships between different methodological approaches

2. PROBLEM SPACE MAPPING
   - Identify the key problems being addressed across the papers
   - Analyze how different papers approach similar problems
   - Highlight patterns in problem formulation

3. EVALUATION LANDSCAPE
   - Analyze the common datasets and evaluation methods
   - Identify patterns in how performance is measured
   - Compare evaluation approaches across papers

4. RESEARCH CLUSTERS
   - Identify groups of papers that appear closely related
   - Describe the key characteristics of each cluster
   - Analyze relationships between clusters

5. TECHNICAL EVOLUTION
   - Identify any visible progression or evolution of ideas
   - Highlight building blocks and their extensions
   - Note any competing or complementary approaches

## Example Output Format
METHODOLOGICAL LANDSCAPE
- Cluster 1: [Description of similar methods across papers]
  - Papers X, Y, Z employ transformer-based approaches with variations in...
  - These methods share characteristics such as...
  - They differ primarily in...

PROBLEM SPACE MAPPING
- Problem Area 1: [Description of a common problem addressed]
  - Papers A, B, C all address this problem but differ in...
  - The problem is formulated differently in Paper D which focuses on...

... [additional sections] ...

Ensure your analysis is comprehensive, identifying significant patterns 
and relationships across the collection of papers.

## Papers:
{papers})__PL__";

const char* k_delta_text = R"__PL__(# Novelty Delta Analysis for Reviewer Support

## Task
Independently analyze how the submission paper's contributions relate to existing 
work in the field, critically examining both author claims and actual relationships. 
This analysis should help reviewers assess novelty by providing objective comparisons 
with prior work.

## Input Format
You will be provided with:
1. The structured information from the submission paper
2. A comprehensive research landscape analysis
3. Citation sentences for key related papers (how authors cite and characterize these works)

## Key Analysis Principles
- Independently verify relationships between submission and prior work
- Critically examine how authors characterize and compare with prior work
- Identify discrepancies between author characterizations and actual relationships
- Present evidence-based observations without making final judgments
- Distinguish between author-claimed differences and independently observed differences
- Provide context about field maturity and related work

## Output Format
Provide a detailed analysis with the following sections:

1. RESEARCH CONTEXT POSITIONING
   - Situate the submission within the identified research landscape
   - Identify the most closely related prior works
   - Independently assess how the submission relates to existing methodological clusters
   - Analyze its place within the problem space and evaluation approaches
   - Note: Do not accept author positioning claims without verification

2. AUTHOR CITATION ANALYSIS
   - Analyze how authors characterize and compare with each cited related work
   - Identify patterns in how authors position their contributions relative to others
   - Assess whether characterizations of prior work are accurate and balanced
   - Note discrepancies between how authors describe prior work and independent assessment
   - Evaluate whether claimed improvements or differences are substantiated
   - Identify rhetoric that may overstate differences or understate similarities

3. CONTRIBUTION DELTA ANALYSIS
   For each main contribution claimed in the submission:
   - Identify the most similar prior work for this specific contribution
   - Critically examine whether claimed differences actually exist
   - Detail exactly how this contribution differs from prior work, based on evidence
   - Compare author characterizations with independently verified relationships
   - Distinguish between substantive differences and superficial variations
   - Note when author claims about novelty or extension may be overstated
   - Consider whether improvements might be due to implementation details rather than 
     conceptual advances
   - Note: Present factual observations about deltas without accepting author framing

4. FIELD CONTEXT CONSIDERATIONS
   - Provide information about how active/mature this research area is
   - Identify recent survey papers or literature reviews in this space
   - Note trends in how the field has been evolving
   - Present context about typical incremental advances in this field
   - Note: Offer context that helps reviewers calibrate their expectations

5. CRITICAL ASSESSMENT CONSIDERATIONS
   - Identify aspects where claimed novelty may be overstated
   - Analyze whether authors' characterizations of their own novelty align with evidence
   - Consider whether empirical improvements might result from factors other than claimed 
     innovations
   - Assess whether terminology differences might mask conceptual similarities
   - Identify instances where "extensions" might be routine adaptations
   - Note: Frame these as considerations rather than definitive judgments

6. RELATED WORK CONSIDERATIONS
   - Identify potentially relevant work not addressed in the submission
   - Highlight areas where additional comparisons are necessary
   - Note incomplete or potentially misleading characterizations of prior work
   - Identify when claimed "limitations" of prior work may be exaggerated
   - Compare how authors cite specific works versus how they actually relate
   - Note: Present these as information that might help complete the picture

7. KEY OBSERVATION SUMMARY
   - Highlight the most significant independently verified differences from prior work
   - Summarize the main relationships to existing research
   - Identify which claimed contributions have the strongest and weakest differentiation
   - Note the most important discrepancies between author characterizations and 
     independent assessment
   - Note: Frame as observations to inform the reviewer's independent judgment

## Evidence Standards
For each observation, provide:
- Specific references to prior work
- Clear distinction between author claims and independently verified differences
- Explicit identification of similarities and differences based on technical details
- Assessment of whether differences appear substantive or superficial
- Analysis of accuracy in how authors characterize related work

## Example Format for Citation Analysis
"For [Paper X], the authors characterize it as 'limited to simple datasets' and claim 
their work 'extends X to complex scenarios.' The citation sentences appear in the 
following contexts:
- 'Unlike X, which only works on simple datasets, our approach handles complex 
  scenarios' (Introduction)
- 'X proposed the basic framework, but did not address challenge Y' (Related Work)

Independent analysis suggests that Paper X actually did address complex scenarios 
in Section 3.2, though using different terminology. The authors' characterization 
appears to understate X's capabilities to emphasize their contribution. The actual 
primary difference appears to be [specific technical difference] rather than the 
complexity of supported scenarios."

Remember that your role is to provide objective analysis that helps reviewers make 
informed judgments about novelty. Carefully examine both what authors explicitly 
claim and how they implicitly position their work through their characterizations 
of prior research.

{structured_representation}

## Papers from related work not cited
{not_cited_paper_titles}

##Citation Context
{citation_contexts}

## Research Landscape
{research_landscape})__PL__";

const char* k_summary_text = R"__PL__(Summarize the following assessment in 5 sentences for a reviewer reviewing at an AI conference.

## Delta Assessment
{novelty_assessment})__PL__";

const char* k_normalization_text = R"__PL__(I'll provide you with a novelty assessment extracted from an academic peer review, 
along with the full review for context. Please reformat the novelty assessment into 
a standardized paragraph that begins with a brief description of the paper's contribution 
before analyzing its novelty.

Example of desired format:
"This paper presents a method for neural network compression using knowledge distillation 
with a focus on mobile applications. The approach has limited novelty, as it largely 
builds upon existing techniques in the literature. While the authors claim their technique 
is the first to combine layerwise distillation with quantization-aware training, similar 
combinations have been explored in prior work by Smith et al. (2022) and Jones et al. (2023). 
The main contribution appears to be a specific implementation detail in how gradient flows 
are managed during the distillation process, but this incremental advance does not 
significantly push the boundaries of the field. The paper would benefit from more clearly 
articulating the specific differences from existing approaches to better establish its contribution."

Full review (for context):
{full_review}

Extracted novelty assessment to be reformatted:
{novelty_statements}

Important guidelines:
1. Begin with a clear description of what the paper presents/proposes (drawn from the full review if needed)
2. Create a cohesive paragraph that flows from describing the contribution to analyzing its novelty
3. Maintain all novelty claims and critiques from the original assessment
4. Preserve references to prior work and comparisons
5. Keep the reviewer's judgment of novelty level
6. Incorporate relevant context from the full review to provide a complete picture of the novelty assessment
7. Follow the structure of the example paragraph: description first, then novelty analysis
8. Preserve all critical analysis regarding limitations or strengths of novelty claims

Provide the reformatted novelty assessment:)__PL__";

const char* k_core_judgments_text = R"__PL__(Extract 2-3 core novelty judgments from this assessment:

{reference_assessment}

Focus on statements that directly assess:
- How novel/original the contribution is
- How work relates to prior research
- Specific novelty limitations
- Whether advance is incremental/fundamental

Exclude general recommendations or writing suggestions.

For each judgment, explain why it's considered a core novelty assessment.
Provide rationale for your selection of these specific judgments.)__PL__";

const char* k_judge_text = R"__PL__(Compare reviewer assessment against reference using these core judgments:

Core Judgments: {extracted_core_judgments}
Reference: {reference_assessment}
Reviewer: {reviewer_assessment}

Evaluate three dimensions:

1. JUDGMENT SIMILARITY: Do they identify same novelty strengths/weaknesses?
   - For each core judgment, find corresponding judgment in reviewer assessment
   - Assess similarity and provide detailed explanation of alignment/differences
   - Include confidence score for each comparison
   - If the core judgement is referring to a very specific aspect of the methodology 
     and the reviewer assessment does not mention it, then the core judgment is 
     not similar to the reviewer assessment.

2. CONCLUSION ALIGNMENT: Same bottom-line about novelty sufficiency?
   - Determine overall conclusions (SUFFICIENT / INSUFFICIENT / MIXED)
   - Explain whether conclusions align and why

3. PRIOR_WORK_ENGAGEMENT:
   - How does the reviewer engage with prior work?
   - Does the reviewer mention prior work?
   - Does the reviewer compare the current work to prior work?
   - Does the reviewer provide evidence for their claims?
   - Does the reviewer use prior work to support or critique the work?
   - Evaluate number and relevance of citations to prior work 
     (NONE: no citations; LIMITED: 1 to 2; EXTENSIVE: 3+ relevant citations).

4. DEPTH_OF_ANALYSIS:
   - Assesses how deeply specific novelty aspects are compared to prior work
     (SURFACE LEVEL: vague; MODERATE: 1 to 2 aspects; DEEP: 3+ or highly detailed comparisons)

Provide explanations for all assessments to support reasoning.)__PL__";

const char* k_query_gen_text = R"__PL__(Generate exactly {query_count} keyword search queries for finding research papers related to the submission below. Each query should target a different aspect of the work (methods, problem domain, datasets, applications, or techniques). Output one query per line with no numbering and no extra text.

Submission title: {title}

Submission abstract:
{abstract})__PL__";

const char* k_rerank_text = R"__PL__(You are ranking research papers by how relevant they are to a submission under review, emphasizing methodological approaches, novelty claims, and problem statements over surface-level topical similarity.

Submission:
{submission}

Candidate papers:
{candidates}

Rank all {count} candidates from most to least relevant to the submission. Output only the ranking as bracketed indices separated by " > ", for example: [2] > [1] > [3]. Include every index exactly once.)__PL__";

std::vector<PromptTemplate> build_registry() {
    return {
        {"extraction", k_extraction_text, {"title", "abstract", "introduction"},
         "You respond with a single JSON object containing exactly the keys \"methods\", \"problems\", \"datasets\", \"metrics\", \"results\", and \"novelty_claims\". Values of \"results\" are objects with \"metric\" and \"value\" fields. No prose outside the JSON object."},
        {"landscape", k_landscape_text, {"papers"},
         ""},
        {"delta", k_delta_text, {"structured_representation", "not_cited_paper_titles", "citation_contexts", "research_landscape"},
         ""},
        {"summary", k_summary_text, {"novelty_assessment"},
         ""},
        {"normalization", k_normalization_text, {"full_review", "novelty_statements"},
         ""},
        {"core-judgments", k_core_judgments_text, {"reference_assessment"},
         "Respond with a numbered list. Each item begins with the judgment statement on its own line, followed by a line starting with \"Rationale:\" explaining the selection."},
        {"judge", k_judge_text, {"extracted_core_judgments", "reference_assessment", "reviewer_assessment"},
         "You respond with a single JSON object with keys: \"judgment_matches\" (array of objects with \"matched\" boolean, \"confidence\" number in [0,1], and \"explanation\" string, one per core judgment in order), \"reference_conclusion\" and \"candidate_conclusion\" (each SUFFICIENT, INSUFFICIENT, or MIXED), \"engagement\" (NONE, LIMITED, or EXTENSIVE), and \"depth\" (SURFACE, MODERATE, or DEEP). No prose outside the JSON object."},
        {"query-gen", k_query_gen_text, {"query_count", "title", "abstract"},
         "Respond with one query per line and nothing else."},
        {"rerank", k_rerank_text, {"submission", "candidates", "count"},
         "Respond with the ranking only, formatted like [2] > [1] > [3]."},
    };
}

const std::vector<PromptTemplate>& registry() {
    static const std::vector<PromptTemplate> templates = build_registry();
    return templates;
}

} // namespace

const std::vector<PromptTemplate>& all_templates() { return registry(); }

const PromptTemplate& get_template(const std::string& id) {
    for (const auto& t : registry())
        if (t.id == id) return t;
    raise(ErrorKind::ConfigError, "unregistered prompt template: " + id);
}

bool is_registered_template(const std::string& id) {
    for (const auto& t : registry())
        if (t.id == id) return true;
    return false;
}

std::string render_template(const std::string& id,
                            const std::map<std::string, std::string>& values) {
    const PromptTemplate& tmpl = get_template(id);
    for (const auto& name : tmpl.placeholders)
        if (values.find(name) == values.end())
            raise(ErrorKind::ConfigError, "missing value for placeholder {" + name + "} of " + id);

    // Single pass over the template so placeholder-like substrings inside
    // substituted values are never re-expanded.
    std::string out;
    out.reserve(tmpl.text.size());
    size_t pos = 0;
    while (pos < tmpl.text.size()) {
        size_t open = tmpl.text.find('{', pos);
        if (open == std::string::npos) {
            out.append(tmpl.text, pos, std::string::npos);
            break;
        }
        size_t close = tmpl.text.find('}', open);
        bool substituted = false;
        if (close != std::string::npos) {
            std::string name = tmpl.text.substr(open + 1, close - open - 1);
            auto it = values.find(name);
            if (it != values.end()) {
                out.append(tmpl.text, pos, open - pos);
                out += it->second;
                pos = close + 1;
                substituted = true;
            }
        }
        if (!substituted) {
            out.append(tmpl.text, pos, open - pos + 1);
            pos = open + 1;
        }
    }
    return out;
}

bool fully_rendered(const std::string& id, const std::string& rendered) {
    const PromptTemplate& tmpl = get_template(id);
    for (const auto& name : tmpl.placeholders)
        if (rendered.find("{" + name + "}") != std::string::npos) return false;
    return true;
}

} // namespace priorlens::prompts
