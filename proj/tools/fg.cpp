// Command-line surface for subgroup arithmetic in free groups.
//
// Exit codes: 0 success (or: word is a member), 1 word is not a member,
// 2 precondition violation, 3 resource cap exceeded, 4 malformed input.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fg/actions.hpp"
#include "fg/constructions.hpp"
#include "fg/enumeration.hpp"
#include "fg/subgroup_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNonMember = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitResource = 3;
constexpr int kExitMalformed = 4;

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw fg::ParseError("cannot write " + path);
  f << body;
}

// Subgroup results are emitted in the generator-file format (re-parseable);
// --dot additionally writes the core graph.
void emit_subgroup(const fg::SubgroupHandle& h, const std::string& out,
                   const std::string& dot, const std::string& label = "") {
  std::string body = fg::write_subgroup_file(h.alphabet(), fg::basis(h));
  if (!out.empty()) {
    write_file(out, body);
  } else {
    if (!label.empty()) std::cout << "# " << label << "\n";
    std::cout << body;
  }
  if (!dot.empty()) write_file(dot, fg::to_dot(h));
}

std::vector<fg::ReducedWord> parse_words(const std::vector<std::string>& texts,
                                         const fg::Alphabet& alphabet) {
  std::vector<fg::ReducedWord> out;
  for (const auto& t : texts) out.push_back(fg::parse_word(t, alphabet));
  return out;
}

fg::Alphabet default_alphabet(int rank) {
  if (rank == 2) return fg::Alphabet({"x", "y"});
  std::vector<std::string> names;
  for (int i = 1; i <= rank; ++i) names.push_back("x" + std::to_string(i));
  return fg::Alphabet(names);
}

int run(int argc, char** argv) {
  CLI::App app{"Effective subgroup arithmetic in free groups via core graphs"};
  app.require_subcommand(1);

  std::string file_a, file_b, word_text, out_file, dot_file, audit_file, dir;
  std::vector<std::string> word_texts, file_list, frame_letters;
  int cover_index = 2, radius = 0, stages = 1, budget = 6, max_vertices = 20000;
  int sc_rank = 2;

  auto add_out = [&](CLI::App* cmd, bool dot = true) {
    cmd->add_option("--out", out_file, "write the resulting subgroup file here");
    if (dot) cmd->add_option("--dot", dot_file, "write the core graph as DOT");
  };

  auto* c_core = app.add_subcommand("core", "canonical core graph and summary");
  c_core->add_option("genfile", file_a)->required();
  c_core->add_option("--dot", dot_file);

  auto* c_member = app.add_subcommand("member", "membership test (exit 0/1)");
  c_member->add_option("genfile", file_a)->required();
  c_member->add_option("word", word_text)->required();

  auto* c_index = app.add_subcommand("index", "index in the ambient free group");
  c_index->add_option("genfile", file_a)->required();

  auto* c_rank = app.add_subcommand("rank", "free rank of the subgroup");
  c_rank->add_option("genfile", file_a)->required();

  auto* c_basis = app.add_subcommand("basis", "free basis from the spanning tree");
  c_basis->add_option("genfile", file_a)->required();

  auto* c_intersect = app.add_subcommand("intersect", "intersection of two subgroups");
  c_intersect->add_option("a", file_a)->required();
  c_intersect->add_option("b", file_b)->required();
  add_out(c_intersect);

  auto* c_join = app.add_subcommand("join", "subgroup generated by two subgroups");
  c_join->add_option("a", file_a)->required();
  c_join->add_option("b", file_b)->required();
  add_out(c_join);

  auto* c_conj = app.add_subcommand("conjugate", "conjugate g A g^-1");
  c_conj->add_option("a", file_a)->required();
  c_conj->add_option("-g,--word", word_text, "conjugator")->required();
  add_out(c_conj);

  auto* c_hall = app.add_subcommand(
      "hall", "finite-index overgroup avoiding an exclusion set");
  c_hall->add_option("a", file_a)->required();
  c_hall->add_option("--exclude", word_texts, "words to avoid")->delimiter(',');
  add_out(c_hall);

  auto* c_cover = app.add_subcommand(
      "cover", "finite cover with a deficit vertex outside the Y-frame");
  c_cover->add_option("subgroup", file_a)->required();
  c_cover->add_option("--frame", frame_letters, "letters spanning the frame")
      ->delimiter(',')
      ->required();
  c_cover->add_option("--index", cover_index, "cover degree (>= 2)");
  add_out(c_cover);

  auto* c_pair = app.add_subcommand(
      "pair", "finite-index pair (A1, B0) with envelope B1");
  c_pair->add_option("a", file_a)->required();
  c_pair->add_option("b", file_b)->required();
  c_pair->add_option("--audit", audit_file);

  auto* c_family = app.add_subcommand(
      "family", "finite-index shrinks with an infinite-index join");
  c_family->add_option("files", file_list, "subgroup files")->required();
  c_family->add_option("--audit", audit_file);

  auto* c_norm = app.add_subcommand(
      "normalized", "envelope B2 normalized by A with finite-index H <= B");
  c_norm->add_option("a", file_a)->required();
  c_norm->add_option("b", file_b)->required();
  c_norm->add_option("--audit", audit_file);

  auto* c_thm = app.add_subcommand(
      "theorem1", "H <= B of finite index with <A,H> of infinite index");
  c_thm->add_option("a", file_a)->required();
  c_thm->add_option("b", file_b)->required();
  c_thm->add_option("--exclude", word_texts, "words <A,H> must avoid")->delimiter(',');
  c_thm->add_option("--audit", audit_file);
  add_out(c_thm);

  auto* c_sc = app.add_subcommand(
      "smallcancel", "rank-r normal supplement witness for the closure of w");
  c_sc->add_option("--rank", sc_rank, "ambient rank (>= 2)");
  c_sc->add_option("--word", word_text, "the word w")->required();
  add_out(c_sc);

  auto* c_buildr = app.add_subcommand("build-r", "iterated R-prefix construction");
  c_buildr->add_option("--stages", stages, "number of stages")->required();
  c_buildr->add_option("--budget", budget, "enumeration budget");
  c_buildr->add_option("--max-vertices", max_vertices, "per-stage core cap");
  c_buildr->add_option("--dir", dir, "output directory")->required();

  auto* c_verifyr = app.add_subcommand("verify-r", "relative index of L against R_N");
  c_verifyr->add_option("dir", dir)->required();
  c_verifyr->add_option("l", file_a)->required();

  auto* c_orbit = app.add_subcommand("orbit", "orbit size of coset Rg under L");
  c_orbit->add_option("r", file_a)->required();
  c_orbit->add_option("l", file_b)->required();
  c_orbit->add_option("-g,--word", word_text, "coset representative (default identity)");

  auto* c_ball = app.add_subcommand("ball", "coset ball of R, optionally partitioned");
  c_ball->add_option("r", file_a)->required();
  c_ball->add_option("--radius", radius)->required();
  c_ball->add_option("--orbits", file_b, "partition the ball into L-orbit cells");
  c_ball->add_option("--dot", dot_file, "Schreier graph of the ball");

  auto* c_distinct = app.add_subcommand("distinct", "pairwise coset distinctness");
  c_distinct->add_option("r", file_a)->required();
  c_distinct->add_option("words", word_texts)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitMalformed;
  }

  auto emit_audit = [&](const fg::StageLog& log) {
    if (!audit_file.empty()) write_file(audit_file, log.to_text());
  };

  if (*c_core) {
    fg::SubgroupHandle h = fg::load_subgroup(file_a);
    std::cout << fg::serialize(h) << "\n";
    std::cout << "rank: " << fg::rank(h) << "\n";
    std::cout << "index: " << fg::index_in_F(h).str() << "\n";
    std::cout << "handle length: " << fg::handle(h).length() << "\n";
    auto report = fg::deficit_vertices(h, fg::full_letter_set(h.alphabet()));
    std::cout << "deficit vertices: " << report.entries.size() << "\n";
    for (const auto& e : report.entries) {
      std::cout << "  vertex " << e.vertex << " missing";
      for (int c : e.missing) std::cout << " " << h.alphabet().code_name(c);
      std::cout << "\n";
    }
    if (!dot_file.empty()) write_file(dot_file, fg::to_dot(h));
    return kExitOk;
  }
  if (*c_member) {
    fg::SubgroupHandle h = fg::load_subgroup(file_a);
    fg::ReducedWord w = fg::parse_word(word_text, h.alphabet());
    fg::MembershipPath path;
    if (!fg::is_member(h, w, &path)) {
      std::cout << "non-member\n";
      return kExitNonMember;
    }
    std::cout << "member; path:";
    for (int v : path.vertices) std::cout << " " << v;
    std::cout << "\n";
    return kExitOk;
  }
  if (*c_index) {
    std::cout << fg::index_in_F(fg::load_subgroup(file_a)).str() << "\n";
    return kExitOk;
  }
  if (*c_rank) {
    std::cout << fg::rank(fg::load_subgroup(file_a)) << "\n";
    return kExitOk;
  }
  if (*c_basis) {
    fg::SubgroupHandle h = fg::load_subgroup(file_a);
    for (const auto& b : fg::basis(h))
      std::cout << fg::format_word(b, h.alphabet()) << "\n";
    return kExitOk;
  }
  if (*c_intersect) {
    emit_subgroup(fg::intersect(fg::load_subgroup(file_a), fg::load_subgroup(file_b)),
                  out_file, dot_file);
    return kExitOk;
  }
  if (*c_join) {
    emit_subgroup(fg::join(fg::load_subgroup(file_a), fg::load_subgroup(file_b)),
                  out_file, dot_file);
    return kExitOk;
  }
  if (*c_conj) {
    fg::SubgroupHandle h = fg::load_subgroup(file_a);
    emit_subgroup(fg::conjugate_subgroup(h, fg::parse_word(word_text, h.alphabet())),
                  out_file, dot_file);
    return kExitOk;
  }
  if (*c_hall) {
    fg::SubgroupHandle h = fg::load_subgroup(file_a);
    emit_subgroup(fg::hall_completion(h, parse_words(word_texts, h.alphabet())),
                  out_file, dot_file);
    return kExitOk;
  }
  if (*c_cover) {
    fg::SubgroupHandle h = fg::load_subgroup(file_a);
    std::vector<int> y;
    for (const auto& name : frame_letters) {
      int i = h.alphabet().index_of(name);
      if (i < 0) throw fg::ParseError("unknown frame letter: " + name);
      y.push_back(i);
    }
    emit_subgroup(fg::frame_avoiding_cover(h, y, cover_index), out_file, dot_file);
    return kExitOk;
  }
  if (*c_pair) {
    fg::StageLog log;
    fg::EnvelopePair pair =
        fg::envelope_pair(fg::load_subgroup(file_a), fg::load_subgroup(file_b), &log);
    emit_subgroup(pair.a1, "", "", "A1");
    emit_subgroup(pair.b0, "", "", "B0");
    emit_subgroup(pair.b1, "", "", "B1");
    emit_audit(log);
    return kExitOk;
  }
  if (*c_family) {
    std::vector<fg::SubgroupHandle> family;
    for (const auto& f : file_list) family.push_back(fg::load_subgroup(f));
    fg::StageLog log;
    fg::FamilyShrink fam = fg::family_shrink(family, &log);
    for (size_t i = 0; i < fam.shrunk.size(); ++i)
      emit_subgroup(fam.shrunk[i], "", "", "H'" + std::to_string(i + 1));
    emit_subgroup(fam.joined, "", "", "J");
    emit_audit(log);
    return kExitOk;
  }
  if (*c_norm) {
    fg::NormalizedEnvelope ne =
        fg::normalized_envelope(fg::load_subgroup(file_a), fg::load_subgroup(file_b));
    emit_subgroup(ne.b2, "", "", "B2");
    emit_subgroup(ne.h, "", "", "H");
    emit_audit(ne.log);
    return kExitOk;
  }
  if (*c_thm) {
    fg::SubgroupHandle a = fg::load_subgroup(file_a);
    fg::SmallJoin sj = fg::small_join(a, fg::load_subgroup(file_b),
                                      parse_words(word_texts, a.alphabet()));
    emit_subgroup(sj.h, out_file, dot_file, "H");
    emit_audit(sj.log);
    return kExitOk;
  }
  if (*c_sc) {
    fg::Alphabet alphabet = default_alphabet(sc_rank);
    fg::ReducedWord w = fg::parse_word(word_text, alphabet);
    fg::NormalSupplementWitness wit = fg::normal_supplement_witness(alphabet, w);
    for (size_t i = 0; i < wit.u_words.size(); ++i)
      std::cout << "u" << (i + 1) << ": |" << wit.u_words[i].length() << "|\n";
    for (size_t i = 0; i < wit.v_words.size(); ++i)
      std::cout << "v" << (i + 1) << ": " << fg::format_word(wit.v_words[i], alphabet)
                << "\n";
    std::cout << "rank(H): " << fg::rank(wit.h) << "\n";
    std::cout << "index: " << fg::index_in_F(wit.h).str() << "\n";
    emit_subgroup(wit.h, out_file, dot_file, "H");
    return kExitOk;
  }
  if (*c_buildr) {
    fg::BuildCaps caps;
    caps.budget = budget;
    caps.max_core_vertices = max_vertices;
    fg::RPrefix prefix = fg::build_R_prefix(default_alphabet(2), stages, caps);
    fg::write_prefix(prefix, dir);
    std::cout << fg::prefix_report(prefix);
    if (prefix.truncated) {
      std::cout << "truncated: " << prefix.truncation_reason << "\n";
      return kExitResource;
    }
    return kExitOk;
  }
  if (*c_verifyr) {
    fg::RPrefix prefix = fg::read_prefix(dir);
    fg::SubgroupHandle l = fg::load_subgroup(file_a);
    std::cout << fg::verify_R_property(prefix, l).str() << "\n";
    return kExitOk;
  }
  if (*c_orbit) {
    fg::SubgroupHandle r = fg::load_subgroup(file_a);
    fg::SubgroupHandle l = fg::load_subgroup(file_b);
    fg::ReducedWord g = word_text.empty() ? fg::ReducedWord::identity()
                                          : fg::parse_word(word_text, r.alphabet());
    std::cout << fg::orbit_size(r, l, g).str() << "\n";
    return kExitOk;
  }
  if (*c_ball) {
    fg::SubgroupHandle r = fg::load_subgroup(file_a);
    if (file_b.empty()) {
      fg::CosetBall ball = fg::coset_ball(r, radius);
      std::cout << "cosets: " << ball.reps.size() << "\n";
      for (const auto& w : ball.reps)
        std::cout << (w.empty() ? "1" : fg::format_word(w, r.alphabet())) << "\n";
      if (!dot_file.empty()) write_file(dot_file, fg::ball_to_dot(r, ball));
    } else {
      fg::SubgroupHandle l = fg::load_subgroup(file_b);
      fg::BallPartition part = fg::orbits_on_ball(r, l, radius);
      std::cout << fg::partition_report(r, l, part);
      if (!dot_file.empty()) write_file(dot_file, fg::ball_to_dot(r, part.ball));
    }
    return kExitOk;
  }
  if (*c_distinct) {
    fg::SubgroupHandle r = fg::load_subgroup(file_a);
    bool ok = fg::cosets_distinct(r, parse_words(word_texts, r.alphabet()));
    std::cout << (ok ? "distinct" : "not distinct") << "\n";
    return ok ? kExitOk : kExitNonMember;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const fg::ParseError& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const fg::ResourceError& e) {
    std::cerr << "resource cap exceeded: " << e.what() << "\n";
    return kExitResource;
  } catch (const fg::PreconditionError& e) {
    std::cerr << "precondition violation: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitPrecondition;
  }
}
