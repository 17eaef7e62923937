#include "recsym/json_io.hpp"

namespace recsym {

namespace {

[[noreturn]] void malformed(const std::string& what, const Json& j) {
  throw Error(Errc::InvalidArgument, "malformed " + what + ": " + j.dump());
}

}  // namespace

Json to_json(const CScalar& s) {
  Json j;
  if (s.is_exact()) {
    j["re"] = s.exact_value().re.get_str();
    j["im"] = s.exact_value().im.get_str();
  } else {
    j["re"] = s.to_complex().real();
    j["im"] = s.to_complex().imag();
  }
  return j;
}

Json to_json(const Vec3& v) { return Json::array({to_json(v[0]), to_json(v[1]), to_json(v[2])}); }

Json to_json(const Quat4& q) {
  Json j;
  j["s"] = to_json(q.scalar());
  j["v"] = to_json(q.vec());
  return j;
}

Json to_json(const Mat2& m) {
  Json j;
  j["m"] = Json::array({Json::array({to_json(m(0, 0)), to_json(m(0, 1))}),
                        Json::array({to_json(m(1, 0)), to_json(m(1, 1))})});
  return j;
}

CScalar cscalar_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im")) malformed("cscalar", j);
  const Json& re = j.at("re");
  const Json& im = j.at("im");
  if (re.is_string() && im.is_string()) {
    return CScalar::exact(parse_rational(re.get<std::string>()), parse_rational(im.get<std::string>()));
  }
  if (re.is_number() && im.is_number()) return CScalar::floating(re.get<double>(), im.get<double>());
  malformed("cscalar (mixed or non-numeric parts)", j);
}

Quat4 quat_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("s") || !j.contains("v")) malformed("Quat4", j);
  const Json& v = j.at("v");
  if (!v.is_array() || v.size() != 3) malformed("Quat4 vector part", j);
  return {cscalar_from_json(j.at("s")), {cscalar_from_json(v[0]), cscalar_from_json(v[1]), cscalar_from_json(v[2])}};
}

Mat2 mat_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("m")) malformed("Mat2", j);
  const Json& m = j.at("m");
  if (!m.is_array() || m.size() != 2 || !m[0].is_array() || !m[1].is_array() || m[0].size() != 2 ||
      m[1].size() != 2) {
    malformed("Mat2 entries", j);
  }
  return {cscalar_from_json(m[0][0]), cscalar_from_json(m[0][1]), cscalar_from_json(m[1][0]),
          cscalar_from_json(m[1][1])};
}

}  // namespace recsym
