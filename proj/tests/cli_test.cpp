#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "plagsim/dataset/dataset.hpp"
#include "plagsim/similarity/similarity.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code = -1;
    std::string out;
};

/// Runs the CLI with stderr folded into the captured output.
Result run(const std::string& args) {
    const std::string cmd = std::string(PLAGSIM_CLI) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    Result r;
    if (!pipe) return r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string corpus_file(const std::string& name) {
    const std::string a = name.substr(1, name.find('-') - 1);
    return std::string(PLAGSIM_TEST_CORPUS) + "/Assignment" + a + "/" + name + ".cpp";
}

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("plagsim-cli-" + name);
    fs::remove_all(p);
    return p;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST(CliCompare, FileAgainstItself) {
    const auto f = corpus_file("A2-NP-Sol-1");
    const auto r = run("compare --json " + f + " " + f);
    ASSERT_EQ(r.code, 0) << r.out;
    const auto j = nlohmann::json::parse(r.out);
    for (const auto& [k, v] : j["scores"].items()) EXPECT_EQ(v.get<double>(), 100.0) << k;
    EXPECT_EQ(j["avg"].get<double>(), 100.0);
    EXPECT_EQ(j["seed"], 42);
}

TEST(CliCompare, CommentCopyScoresFull) {
    const auto r = run("compare --json " + corpus_file("A3-NP-Sol-4") + " " + corpus_file("A3-P-Sol-4-comments"));
    ASSERT_EQ(r.code, 0) << r.out;
    const auto j = nlohmann::json::parse(r.out);
    for (const auto& [k, v] : j["scores"].items()) EXPECT_EQ(v.get<double>(), 100.0) << k;
    EXPECT_EQ(j["gold"], "P");
    EXPECT_TRUE(j["predicted"].is_null());
}

TEST(CliCompare, HumanTable) {
    const auto r = run("compare " + corpus_file("A1-NP-Sol-1") + " " + corpus_file("A1-NP-Sol-2"));
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("SolutionI"), std::string::npos);
    EXPECT_NE(r.out.find("A1-NP-Sol-1"), std::string::npos);
    EXPECT_NE(r.out.find("gold: NP"), std::string::npos);
}

TEST(CliCompare, PredictsWithCorpus) {
    const auto r = run("compare --json --classifier decision-tree --corpus " + std::string(PLAGSIM_TEST_CORPUS) + " " +
                       corpus_file("A1-NP-Sol-3") + " " + corpus_file("A1-P-Sol-3-loops"));
    ASSERT_EQ(r.code, 0) << r.out;
    const auto j = nlohmann::json::parse(r.out.substr(r.out.find('{')));
    EXPECT_TRUE(j["predicted"].is_string());
}

TEST(CliCompare, BrokenFileExitTwo) {
    const auto dir = scratch("broken");
    fs::create_directories(dir);
    std::ofstream(dir / "broken.cpp") << "int main() {\n  int x = ;\n}\n";
    const auto r = run("compare " + (dir / "broken.cpp").string() + " " + corpus_file("A1-NP-Sol-1"));
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("broken.cpp:2:11:"), std::string::npos) << r.out;
    fs::remove_all(dir);
}

TEST(CliCompare, MissingFileExitOne) {
    const auto r = run("compare /nonexistent/a.cpp " + corpus_file("A1-NP-Sol-1"));
    EXPECT_EQ(r.code, 1);
}

TEST(CliExitCodes, ConfigurationErrors) {
    EXPECT_EQ(run("").code, 3);
    EXPECT_EQ(run("frobnicate").code, 3);
    EXPECT_EQ(run("matrix --corpus " + std::string(PLAGSIM_TEST_CORPUS) + " --policy nope --out /tmp/x").code, 3);
    EXPECT_EQ(run("eval --in /nonexistent.csv --classifier svm").code, 3);
    EXPECT_EQ(run("matrix --corpus /nonexistent/root --out /tmp/x").code, 1);
    EXPECT_EQ(run("--help").code, 0);
}

TEST(CliMatrix, SixSortedMatricesMatchingCompare) {
    const auto out = scratch("matrix");
    const auto r = run("matrix --corpus " + std::string(PLAGSIM_TEST_CORPUS) + " --out " + out.string());
    ASSERT_EQ(r.code, 0) << r.out;
    for (int a = 1; a <= 6; ++a) {
        const auto lines = lines_of(slurp(out / ("assignment-" + std::to_string(a) + ".csv")));
        ASSERT_EQ(lines.size(), 2u + 28u);
        EXPECT_EQ(lines[0], "# plagsim 0.1.0 seed=42");
        EXPECT_EQ(lines[1], "SN,SolutionI,SolutionJ,LCS,N1,N2,N3,GST1,GST2,GST3,AVG,STDV");
        double prev = 101;
        for (std::size_t i = 2; i < lines.size(); ++i) {
            const auto fields = plagsim::dataset::detail::split(lines[i], ',');
            ASSERT_EQ(fields.size(), 12u);
            const double avg = std::stod(std::string(fields[10]));
            EXPECT_LE(avg, prev);
            prev = avg;
        }
    }
    // the top row of assignment 1 equals a direct comparison of the same pair
    const std::string top = lines_of(slurp(out / "assignment-1.csv"))[2];
    const auto row = plagsim::dataset::detail::split(top, ',');
    const auto c = run("compare --json " + corpus_file(std::string(row[1])) + " " + corpus_file(std::string(row[2])));
    const auto j = nlohmann::json::parse(c.out);
    const char* names[] = {"LCS", "N1", "N2", "N3", "GST1", "GST2", "GST3"};
    for (int f = 0; f < 7; ++f) EXPECT_DOUBLE_EQ(std::stod(std::string(row[3 + f])), j["scores"][names[f]].get<double>());
    EXPECT_DOUBLE_EQ(std::stod(std::string(row[10])), j["avg"].get<double>());
    fs::remove_all(out);
}

TEST(CliDataset, CsvArffAndManifest) {
    const auto out = scratch("dataset");
    fs::create_directories(out);
    auto r = run("dataset --corpus " + std::string(PLAGSIM_TEST_CORPUS) + " --out " + (out / "d.csv").string() +
                 " --manifest " + (out / "corpus-manifest.json").string());
    ASSERT_EQ(r.code, 0) << r.out;
    const auto ds = plagsim::dataset::read_csv(out / "d.csv");
    EXPECT_EQ(ds.size(), 168u);
    EXPECT_EQ(ds.count(plagsim::Label::P), 36u);
    const auto manifest = nlohmann::json::parse(slurp(out / "corpus-manifest.json"));
    EXPECT_EQ(manifest["solutions"].size(), 60u);

    r = run("dataset --format arff --corpus " + std::string(PLAGSIM_TEST_CORPUS) + " --out " + (out / "d.arff").string());
    ASSERT_EQ(r.code, 0) << r.out;
    const auto arff = slurp(out / "d.arff");
    EXPECT_NE(arff.find("@relation plagsim"), std::string::npos);
    EXPECT_NE(arff.find("@attribute class {NP,P}"), std::string::npos);
    fs::remove_all(out);
}

TEST(CliSmoteEvalRank, ChainOnDatasetFile) {
    const auto out = scratch("chain");
    fs::create_directories(out);
    ASSERT_EQ(run("dataset --corpus " + std::string(PLAGSIM_TEST_CORPUS) + " --out " + (out / "d.csv").string()).code, 0);
    auto r = run("smote --in " + (out / "d.csv").string() + " --out " + (out / "s.csv").string() + " --seed 3");
    ASSERT_EQ(r.code, 0) << r.out;
    const auto s = plagsim::dataset::read_csv(out / "s.csv");
    EXPECT_EQ(s.count(plagsim::Label::P), 36u + 85u);

    r = run("eval --json --in " + (out / "s.csv").string() + " --classifier naive-bayes");
    ASSERT_EQ(r.code, 0) << r.out;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["report"]["classifier"], "naive-bayes");
    EXPECT_EQ(j["report"]["weighted"]["support"], 253);

    r = run("eval --in " + (out / "d.csv").string());
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("Random Forest"), std::string::npos);

    r = run("rank --json --in " + (out / "d.csv").string());
    ASSERT_EQ(r.code, 0) << r.out;
    const auto k = nlohmann::json::parse(r.out);
    EXPECT_EQ(k["ranks"]["ranks"].size(), 7u);

    std::ofstream(out / "tiny.csv") << "LCS,N1,N2,N3,GST1,GST2,GST3,label\n1,1,1,1,1,1,1,P\n2,2,2,2,2,2,2,NP\n";
    EXPECT_EQ(run("eval --in " + (out / "tiny.csv").string()).code, 2);
    EXPECT_EQ(run("smote --in " + (out / "tiny.csv").string()).code, 2);
    fs::remove_all(out);
}

TEST(CliPipeline, BundleIsCompleteAndDeterministic) {
    const auto a = scratch("pipeline-a"), b = scratch("pipeline-b");
    const std::string corpus = std::string(PLAGSIM_TEST_CORPUS);
    ASSERT_EQ(run("pipeline --corpus " + corpus + " --out " + a.string() + " --seed 42 --jobs 1").code, 0);
    ASSERT_EQ(run("pipeline --corpus " + corpus + " --out " + b.string() + " --seed 42 --jobs 3").code, 0);
    for (const char* name : {"dataset.csv", "dataset-smote.csv", "eval-original.json", "eval-smote.json",
                             "feature-ranks.json", "summary.txt"}) {
        ASSERT_TRUE(fs::exists(a / name)) << name;
        EXPECT_EQ(slurp(a / name), slurp(b / name)) << name;
        EXPECT_NE(slurp(a / name).find("42"), std::string::npos) << name;
    }
    const auto smoted = plagsim::dataset::read_csv(a / "dataset-smote.csv");
    const auto original = plagsim::dataset::read_csv(a / "dataset.csv");
    const std::size_t minority = original.count(plagsim::Label::P);
    EXPECT_EQ(smoted.count(plagsim::Label::P), minority + static_cast<std::size_t>(std::llround(2.35 * minority)));

    const auto summary = slurp(a / "summary.txt");
    for (const char* name : {"OneR", "Naive Bayes", "Logistic", "Decision Tree", "Random Forest"}) {
        EXPECT_NE(summary.find(name), std::string::npos) << name;
    }
    EXPECT_NE(summary.find("Original"), std::string::npos);
    EXPECT_NE(summary.find("Oversampled"), std::string::npos);
    fs::remove_all(a);
    fs::remove_all(b);
}

TEST(CliPipeline, FailureLeavesNoOutputs) {
    const auto dir = scratch("pipeline-fail");
    fs::create_directories(dir / "corpus" / "A1");
    std::ofstream(dir / "corpus" / "A1" / "A1-NP-Sol-1.cpp") << "int main(){ return 0; }";
    std::ofstream(dir / "corpus" / "A1" / "A1-NP-Sol-2.cpp") << "int main(){ return 1; }";
    const auto r = run("pipeline --corpus " + (dir / "corpus").string() + " --out " + (dir / "out").string());
    EXPECT_EQ(r.code, 2) << r.out;  // a single class cannot be stratified or oversampled
    EXPECT_FALSE(fs::exists(dir / "out" / "dataset.csv"));
    fs::remove_all(dir);
}
