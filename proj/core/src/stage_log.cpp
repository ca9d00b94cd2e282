#include "fg/stage_log.hpp"

#include <sstream>

#include "fg/constructions.hpp"

namespace fg {

std::string Certificate::describe() const {
  switch (kind) {
    case Kind::RelIndexFinite: return "rel_index_finite " + a + " " + b;
    case Kind::RelIndexEquals:
      return "rel_index_equals " + a + " " + b + " " + std::to_string(expected);
    case Kind::IndexInfinite: return "index_infinite " + a;
    case Kind::IndexFinite: return "index_finite " + a;
    case Kind::MemberWord: return "member " + a + " " + b;
    case Kind::NotMemberWord: return "not_member " + a + " " + b;
    case Kind::ContainsSubgroup: return "contains " + a + " " + b;
  }
  return "?";
}

const SubgroupHandle* LogStage::find(const std::string& name) const {
  for (const auto& [n, h] : handles)
    if (n == name) return &h;
  return nullptr;
}

namespace {

bool check_certificate(const LogStage& stage, const Certificate& cert,
                       std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = "[" + stage.step + "] " + cert.describe() + ": " + msg;
    return false;
  };
  const SubgroupHandle* ha = stage.find(cert.a);
  if (!ha) return fail("unknown handle " + cert.a);
  switch (cert.kind) {
    case Certificate::Kind::IndexInfinite:
      if (index_in_F(*ha).finite) return fail("index is finite");
      return true;
    case Certificate::Kind::IndexFinite:
      if (!index_in_F(*ha).finite) return fail("index is infinite");
      return true;
    case Certificate::Kind::MemberWord:
    case Certificate::Kind::NotMemberWord: {
      ReducedWord w = parse_word(cert.b, ha->alphabet());
      bool member = is_member(*ha, w);
      if (member != (cert.kind == Certificate::Kind::MemberWord))
        return fail("membership mismatch");
      return true;
    }
    case Certificate::Kind::RelIndexFinite:
    case Certificate::Kind::RelIndexEquals: {
      const SubgroupHandle* hb = stage.find(cert.b);
      if (!hb) return fail("unknown handle " + cert.b);
      RelIndex ri = relative_index(*ha, *hb);
      if (!ri.finite()) return fail("relative index " + ri.str());
      if (cert.kind == Certificate::Kind::RelIndexEquals && ri.n != cert.expected)
        return fail("relative index " + std::to_string(ri.n));
      return true;
    }
    case Certificate::Kind::ContainsSubgroup: {
      const SubgroupHandle* hb = stage.find(cert.b);
      if (!hb) return fail("unknown handle " + cert.b);
      for (const auto& g : basis(*hb))
        if (!is_member(*ha, g)) return fail("generator escapes");
      return true;
    }
  }
  return fail("unknown certificate kind");
}

}  // namespace

bool StageLog::verify(std::string* first_failure) const {
  for (const auto& stage : stages_) {
    for (const auto& cert : stage.certs) {
      if (!check_certificate(stage, cert, first_failure)) return false;
    }
  }
  return true;
}

std::string StageLog::to_text() const {
  std::ostringstream out;
  int i = 0;
  for (const auto& stage : stages_) {
    out << "[stage " << ++i << "] " << stage.step << "\n";
    if (!stage.note.empty()) out << "  note: " << stage.note << "\n";
    for (const auto& [name, h] : stage.handles) {
      out << "  handle " << name << ":\n";
      std::istringstream body(serialize(h));
      std::string line;
      while (std::getline(body, line)) out << "    " << line << "\n";
    }
    for (const auto& cert : stage.certs)
      out << "  certificate: " << cert.describe() << "\n";
  }
  return out.str();
}

}  // namespace fg
