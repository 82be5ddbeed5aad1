#include "satsemi/format.hpp"

#include <sstream>

#include "json.hpp"

#include "satsemi/sat_generators.hpp"

namespace satsemi {

  namespace {

    using Json = nlohmann::ordered_json;

    std::string join(std::vector<Element> const& v, char const* sep) {
      std::ostringstream out;
      for (std::size_t i = 0; i < v.size(); ++i) {
        out << (i ? sep : "") << v[i];
      }
      return out.str();
    }

    Json record_json(OutputRecord const& r) {
      Json j;
      j["frobenius"]           = r.frobenius;
      j["small_elements"]      = r.small_elements;
      j["gaps"]                = r.gaps;
      j["msg"]                 = r.msg;
      j["sat_msg"]             = r.sat_msg ? Json(*r.sat_msg) : Json(nullptr);
      j["genus"]               = r.genus;
      j["multiplicity"]        = r.multiplicity;
      j["embedding_dimension"] = r.embedding_dimension;
      j["rank"]                = r.rank ? Json(*r.rank) : Json(nullptr);
      return j;
    }

  }  // namespace

  OutputRecord make_record(NumericalSemigroup const& s) {
    OutputRecord r;
    r.frobenius      = s.frobenius();
    r.small_elements = s.small_elements();
    r.gaps           = s.gaps();
    r.genus          = s.genus();
    r.multiplicity   = s.multiplicity();
    bool const sat   = is_saturated(s);
    r.msg = sat ? med_minimal_generators(s).to_vector() : minimal_generators(s).to_vector();
    r.embedding_dimension = r.msg.size();
    if (sat) {
      r.sat_msg = minimal_system(s).elements;
      r.rank    = r.sat_msg->size();
    }
    return r;
  }

  std::string canonical_text(NumericalSemigroup const& s) {
    return "⟨" + join(minimal_generators(s).to_vector(), ",") + "⟩ | F="
           + std::to_string(s.frobenius());
  }

  std::string to_text_line(OutputRecord const& r, bool color) {
    std::vector<Element> members{0};
    members.insert(members.end(), r.small_elements.begin(), r.small_elements.end());
    members.push_back(r.frobenius + 1);
    std::ostringstream out;
    if (color) {
      out << "\x1b[1m" << join(members, ",") << "→\x1b[0m";
    } else {
      out << join(members, ",") << "→";
    }
    out << " | msg=⟨" << join(r.msg, ",") << "⟩ | g=" << r.genus << " | rank=";
    if (r.rank) {
      out << *r.rank;
    } else {
      out << '-';
    }
    return out.str();
  }

  std::string to_json(NumericalSemigroup const& s) {
    Json j;
    j["frobenius"]      = s.frobenius();
    j["small_elements"] = s.small_elements();
    j["msg"]            = minimal_generators(s).to_vector();
    j["genus"]          = s.genus();
    j["multiplicity"]   = s.multiplicity();
    return j.dump();
  }

  std::string to_json(OutputRecord const& r) {
    return record_json(r).dump();
  }

  std::string to_json(std::vector<OutputRecord> const& rs) {
    auto list = Json::array();
    for (auto const& r : rs) {
      list.push_back(record_json(r));
    }
    return list.dump();
  }

  std::string csv_header() {
    return "frobenius,genus,multiplicity,edim,rank,small_elements,msg,sat_msg";
  }

  std::string to_csv_row(OutputRecord const& r) {
    std::ostringstream out;
    out << r.frobenius << ',' << r.genus << ',' << r.multiplicity << ','
        << r.embedding_dimension << ',';
    if (r.rank) {
      out << *r.rank;
    }
    out << ',' << join(r.small_elements, ";") << ',' << join(r.msg, ";") << ',';
    if (r.sat_msg) {
      out << join(*r.sat_msg, ";");
    }
    return out.str();
  }

  NumericalSemigroup semigroup_from_json(std::string const& text) {
    Json j;
    try {
      j = Json::parse(text);
      return NumericalSemigroup::from_small_elements(
          j.at("frobenius").get<Element>(), j.at("small_elements").get<std::vector<Element>>());
    } catch (Json::exception const& e) {
      throw Error(ErrorCode::PreconditionViolated, std::string("malformed record: ") + e.what());
    }
  }

}  // namespace satsemi
