// Copyright 2026 The tracegen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance
// with the License. You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License
// is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express
// or implied. See the License for the specific language governing permissions and limitations under the License.

// tracegen command line. Links only the C interface.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "tracegen/tracegen.h"

namespace {

struct Common {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> personas;
    std::string out;
    bool offline = false;
    std::optional<std::size_t> ablated;
};

// 2 for usage and configuration problems, 1 for everything else.
int exit_code(int status) {
    if (status == TRACEGEN_OK) return 0;
    if (status == TRACEGEN_CONFIG_ERROR || status == TRACEGEN_INVALID_ARGUMENT) return 2;
    return 1;
}

int report_failure(const char* what, int status) {
    std::fprintf(stderr, "tracegen %s: %s: %s\n", what, tracegen_status_name(status), tracegen_last_error());
    return exit_code(status);
}

class Config {
public:
    ~Config() { tracegen_config_free(handle_); }

    int open(const Common& c) {
        const int rc = c.config_path.empty() ? tracegen_config_new(&handle_)
                                             : tracegen_config_load(c.config_path.c_str(), &handle_);
        if (rc != TRACEGEN_OK) return rc;
        if (c.seed) tracegen_config_set_seed(handle_, *c.seed);
        if (c.personas) {
            if (const int r = tracegen_config_set_personas(handle_, *c.personas); r != TRACEGEN_OK) return r;
        }
        if (!c.out.empty()) tracegen_config_set_out(handle_, c.out.c_str());
        if (c.offline) tracegen_config_set_offline(handle_);
        if (c.ablated) tracegen_config_set_ablated(handle_, *c.ablated);
        return TRACEGEN_OK;
    }

    const tracegen_config* get() const { return handle_; }

private:
    tracegen_config* handle_ = nullptr;
};

class Result {
public:
    ~Result() { tracegen_result_free(handle_); }
    tracegen_result** out() { return &handle_; }
    const tracegen_result* get() const { return handle_; }

private:
    tracegen_result* handle_ = nullptr;
};

void add_common(CLI::App* cmd, Common& c, bool with_personas) {
    cmd->add_option("--config", c.config_path, "Run config JSON file")->check(CLI::ExistingFile);
    cmd->add_option("--seed", c.seed, "Seed (overrides the config)");
    if (with_personas) cmd->add_option("--personas", c.personas, "Number of personas")->check(CLI::PositiveNumber);
    cmd->add_flag("--offline", c.offline, "Use the deterministic mock backend");
}

int run_generate(const Common& c) {
    Config config;
    if (const int rc = config.open(c); rc != TRACEGEN_OK) return report_failure("generate", rc);
    Result result;
    const int rc = tracegen_generate(config.get(), result.out());
    if (result.get()) std::printf("%s\n", tracegen_result_json(result.get()));
    return rc == TRACEGEN_OK ? 0 : report_failure("generate", rc);
}

int run_build_memory(const Common& c, const std::string& descriptions, const std::string& out_path) {
    Config config;
    if (const int rc = config.open(c); rc != TRACEGEN_OK) return report_failure("build-memory", rc);
    Result result;
    const int rc = tracegen_build_memory(config.get(), descriptions.empty() ? nullptr : descriptions.c_str(),
                                         out_path.c_str(), result.out());
    if (rc != TRACEGEN_OK) return report_failure("build-memory", rc);
    std::printf("%s\n", tracegen_result_json(result.get()));
    return 0;
}

int run_evaluate(const Common& c, const std::vector<std::string>& corpora) {
    Config config;
    if (const int rc = config.open(c); rc != TRACEGEN_OK) return report_failure("evaluate", rc);
    std::vector<const char*> paths;
    for (const auto& p : corpora) paths.push_back(p.c_str());
    Result result;
    const int rc = tracegen_evaluate(config.get(), paths.data(), paths.size(), c.out.empty() ? nullptr : c.out.c_str(),
                                     result.out());
    if (rc != TRACEGEN_OK) return report_failure("evaluate", rc);
    std::printf("%s", tracegen_result_text(result.get()));
    return 0;
}

int run_schemas(const std::string& name, const std::string& out_dir) {
    Result list;
    if (const int rc = tracegen_schema(name.empty() ? nullptr : name.c_str(), list.out()); rc != TRACEGEN_OK) {
        return report_failure("schemas", rc);
    }
    if (out_dir.empty()) {
        std::printf("%s\n", tracegen_result_json(list.get()));
        return 0;
    }
    // Writes every schema (or the named one) as <name>.json.
    std::vector<std::string> names;
    if (!name.empty()) {
        names.push_back(name);
    } else {
        const std::string text = tracegen_result_json(list.get());
        for (std::size_t pos = text.find('"'); pos != std::string::npos; pos = text.find('"', pos + 1)) {
            const auto end = text.find('"', pos + 1);
            names.push_back(text.substr(pos + 1, end - pos - 1));
            pos = end;
        }
    }
    for (const auto& n : names) {
        Result doc;
        if (const int rc = tracegen_schema(n.c_str(), doc.out()); rc != TRACEGEN_OK) return report_failure("schemas", rc);
        std::ofstream f(out_dir + "/" + n + ".json", std::ios::binary);
        f << tracegen_result_json(doc.get()) << "\n";
        if (!f) {
            std::fprintf(stderr, "tracegen schemas: cannot write %s/%s.json\n", out_dir.c_str(), n.c_str());
            return 1;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Synthetic digital footprints from persona-grounded event forests"};
    app.require_subcommand(1);

    Common gen;
    auto* generate = app.add_subcommand("generate", "Generate persona footprints");
    add_common(generate, gen, true);
    generate->add_option("--out", gen.out, "Output directory");

    Common mem;
    std::string descriptions;
    std::string memory_out;
    auto* build = app.add_subcommand("build-memory", "Build and deduplicate the event memory");
    add_common(build, mem, false);
    build->add_option("--descriptions", descriptions, "Persona descriptions, one per line")->check(CLI::ExistingFile);
    build->add_option("--out", memory_out, "Memory file to write (JSONL)")->required();

    Common eval;
    std::vector<std::string> corpora;
    auto* evaluate = app.add_subcommand("evaluate", "Diversity metrics for one or more corpora");
    add_common(evaluate, eval, false);
    evaluate->add_option("--out", eval.out, "Directory for report.json and report.txt");
    evaluate->add_option("--ablated", eval.ablated, "Add a template-baseline row of N emails");
    evaluate->add_option("corpora", corpora, "Corpus files (.jsonl or .txt)");

    std::string schema_name;
    std::string schema_out;
    auto* schemas = app.add_subcommand("schemas", "Print or export the JSON Schemas of model outputs");
    schemas->add_option("--name", schema_name, "Single schema to print");
    schemas->add_option("--out", schema_out, "Directory to write <name>.json files into")->check(CLI::ExistingDirectory);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (*generate) return run_generate(gen);
    if (*build) return run_build_memory(mem, descriptions, memory_out);
    if (*evaluate) return run_evaluate(eval, corpora);
    if (*schemas) return run_schemas(schema_name, schema_out);
    return 2;
}
