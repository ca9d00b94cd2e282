#include "fg/enumeration.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fg {

namespace {

// all reduced words of exact length len, code-lexicographic
void words_of_length(int rank, int len, std::vector<ReducedWord>& out) {
  std::vector<int> cur;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == len) {
      out.push_back(ReducedWord::reduce(cur));
      return;
    }
    for (int c = 0; c < 2 * rank; ++c) {
      if (!cur.empty() && inverse_code(cur.back()) == c) continue;
      cur.push_back(c);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
}

}  // namespace

SubgroupStream::SubgroupStream(Alphabet alphabet, int budget)
    : alphabet_(std::move(alphabet)), budget_(budget) {
  if (budget_ < 1) throw PreconditionError("enumeration budget must be >= 1");
}

SubgroupStream enumerate_subgroups(const Alphabet& alphabet, int budget) {
  return SubgroupStream(alphabet, budget);
}

void SubgroupStream::fill() {
  pending_.clear();
  pos_ = 0;
  auto consider = [&](const std::vector<ReducedWord>& gens) {
    SubgroupHandle h = from_generators(alphabet_, gens);
    std::string key = serialize(h);
    if (!seen_.insert(key).second) return;
    if (index_in_F(h).finite) return;
    pending_.push_back(std::move(h));
  };
  if (total_ == 0) {
    consider({});
    return;
  }
  std::vector<std::vector<ReducedWord>> by_length(total_ + 1);
  for (int len = 1; len <= total_; ++len)
    words_of_length(alphabet_.rank(), len, by_length[len]);

  std::vector<ReducedWord> gens;
  // nondecreasing generator tuples with total length total_, lex order
  auto rec = [&](auto&& self, int remaining, int count_left,
                 const ReducedWord* min_word) -> void {
    if (count_left == 0) {
      if (remaining == 0) consider(gens);
      return;
    }
    for (int len = 1; len * count_left <= remaining; ++len) {
      for (const auto& w : by_length[len]) {
        if (min_word && w < *min_word) continue;
        gens.push_back(w);
        self(self, remaining - len, count_left - 1, &gens.back());
        gens.pop_back();
      }
    }
  };
  for (int count = 1; count <= total_; ++count) rec(rec, total_, count, nullptr);
}

std::optional<SubgroupHandle> SubgroupStream::next() {
  while (pos_ >= pending_.size()) {
    if (total_ > budget_) return std::nullopt;
    fill();
    ++total_;
  }
  return pending_[pos_++];
}

RPrefix build_R_prefix(const Alphabet& alphabet, int n, const BuildCaps& caps) {
  if (n < 1) throw PreconditionError("build_R_prefix: stage count must be >= 1");
  if (alphabet.rank() < 2)
    throw PreconditionError("build_R_prefix: alphabet rank must be >= 2");

  RPrefix out;
  out.alphabet = alphabet;
  SubgroupStream stream(alphabet, caps.budget);
  while (static_cast<int>(out.stages.size()) < n) {
    auto l = stream.next();
    if (!l) {
      out.truncated = true;
      out.truncation_reason = "enumeration budget exhausted";
      break;
    }
    if (l->is_trivial()) continue;  // joining the trivial subgroup is a no-op

    int i = static_cast<int>(out.stages.size()) + 1;
    RStage stage;
    stage.l = *l;
    stage.l.name = "L" + std::to_string(i);
    if (out.stages.empty()) {
      stage.h = stage.l;
      stage.h.name = "H1";
      stage.r = stage.l;
      stage.r.name = "R1";
    } else {
      const SubgroupHandle& prev = out.stages.back().r;
      SmallJoin sj;
      try {
        sj = small_join(prev, *l, {});
      } catch (const ResourceError& e) {
        out.truncated = true;
        out.truncation_reason =
            "stage " + std::to_string(i) + " exceeds resource caps: " + e.what();
        break;
      }
      out.log.append(sj.log);
      stage.h = sj.h;
      stage.h.name = "H" + std::to_string(i);
      stage.r = join(prev, sj.h);
      stage.r.name = "R" + std::to_string(i);
      if (stage.r.graph.vertex_count() > caps.max_core_vertices) {
        out.truncated = true;
        out.truncation_reason = "core vertex cap exceeded at stage " + std::to_string(i);
        break;
      }
    }

    LogStage log_stage;
    log_stage.step = "r_stage";
    log_stage.note = "stage " + std::to_string(i);
    log_stage.handles = {{"L", stage.l}, {"H", stage.h}, {"R", stage.r}};
    if (i > 1) log_stage.handles.emplace_back("Rprev", out.stages.back().r);
    log_stage.certs = {
        {Certificate::Kind::IndexInfinite, "R"},
        {Certificate::Kind::RelIndexFinite, "L", "H"},
        {Certificate::Kind::ContainsSubgroup, "R", "H"},
    };
    if (i > 1)
      log_stage.certs.push_back({Certificate::Kind::ContainsSubgroup, "R", "Rprev"});
    out.log.add(std::move(log_stage));
    // reserved slot for interleaved merge stages; intentionally does nothing
    out.log.add(LogStage{"merge_placeholder", "no-op", {}, {}});
    out.stages.push_back(std::move(stage));
  }
  if (out.stages.empty())
    throw PreconditionError("build_R_prefix: no stage could be built");
  return out;
}

RelIndex verify_R_property(const RPrefix& prefix, const SubgroupHandle& l) {
  return relative_index(l, intersect(l, prefix.final_r()));
}

std::string prefix_report(const RPrefix& prefix) {
  std::ostringstream out;
  out << "stages: " << prefix.stages.size() << "\n";
  if (prefix.truncated) out << "truncated: " << prefix.truncation_reason << "\n";
  for (size_t i = 0; i < prefix.stages.size(); ++i) {
    const RStage& s = prefix.stages[i];
    out << "stage " << (i + 1) << ": |L|=" << s.l.graph.vertex_count()
        << " |H|=" << s.h.graph.vertex_count() << " |R|=" << s.r.graph.vertex_count()
        << " rank(R)=" << rank(s.r) << " [F:R]=" << index_in_F(s.r).str() << "\n";
    out << "  [L" << (i + 1) << " : L ∩ R_N] = "
        << verify_R_property(prefix, s.l).str() << "\n";
  }
  const SubgroupHandle& rn = prefix.final_r();
  if (prefix.alphabet.rank() >= 2) {
    // evidence only: no finite stage can certify triviality of normal subgroups
    ReducedWord comm =
        ReducedWord::reduce(std::vector<int>{positive_code(0), positive_code(1),
                                             negative_code(0), negative_code(1)});
    out << "commutator " << format_word(comm, prefix.alphabet)
        << (is_member(rn, comm) ? " IS" : " is not") << " a member of R_N\n";
  }
  out << "deficit vertices of R_N: "
      << deficit_vertices(rn, full_letter_set(prefix.alphabet)).entries.size() << "\n";
  return out.str();
}

void write_prefix(const RPrefix& prefix, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  auto put = [&](const std::string& name, const std::string& body) {
    std::ofstream f(fs::path(dir) / name, std::ios::binary);
    f << body;
  };
  for (size_t i = 0; i < prefix.stages.size(); ++i) {
    std::string n = std::to_string(i + 1);
    put("L" + n + ".core", serialize(prefix.stages[i].l));
    put("H" + n + ".core", serialize(prefix.stages[i].h));
    put("R" + n + ".core", serialize(prefix.stages[i].r));
  }
  std::ostringstream meta;
  meta << "alphabet: " << prefix.alphabet.joined() << "\n";
  meta << "stages: " << prefix.stages.size() << "\n";
  meta << "truncated: " << (prefix.truncated ? prefix.truncation_reason : "no") << "\n";
  put("prefix.txt", meta.str());
  put("log.txt", prefix.log.to_text());
  put("report.txt", prefix_report(prefix));
}

RPrefix read_prefix(const std::string& dir) {
  namespace fs = std::filesystem;
  std::ifstream meta(fs::path(dir) / "prefix.txt");
  if (!meta) throw ParseError("cannot read " + dir + "/prefix.txt");
  RPrefix out;
  std::string line;
  int stages = -1;
  while (std::getline(meta, line)) {
    if (line.rfind("alphabet: ", 0) == 0) {
      std::vector<std::string> names;
      std::istringstream ss(line.substr(10));
      std::string tok;
      while (std::getline(ss, tok, ',')) names.push_back(tok);
      out.alphabet = Alphabet(names);
    } else if (line.rfind("stages: ", 0) == 0) {
      stages = std::stoi(line.substr(8));
    } else if (line.rfind("truncated: ", 0) == 0) {
      std::string v = line.substr(11);
      if (v != "no") {
        out.truncated = true;
        out.truncation_reason = v;
      }
    }
  }
  if (stages < 1) throw ParseError("prefix.txt: missing or bad stage count");
  auto read_core = [&](const std::string& name) {
    std::ifstream f(fs::path(dir) / name, std::ios::binary);
    if (!f) throw ParseError("cannot read " + dir + "/" + name);
    std::ostringstream body;
    body << f.rdbuf();
    return deserialize_subgroup(body.str());
  };
  for (int i = 1; i <= stages; ++i) {
    std::string n = std::to_string(i);
    RStage s{read_core("L" + n + ".core"), read_core("H" + n + ".core"),
             read_core("R" + n + ".core")};
    out.stages.push_back(std::move(s));
  }
  return out;
}

}  // namespace fg
