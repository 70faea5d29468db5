// Copyright 2026 The HELFI Tools Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "helfi/http_api.h"

#include <httplib.h>

#include <vector>

#include "json_codec.h"

namespace helfi {
namespace {

using nlohmann::json;

int StatusFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownVerse:
      return 404;
    case ErrorCode::kRevisionConflict:
    case ErrorCode::kNothingToUndo:
    case ErrorCode::kNothingToRedo:
      return 409;
    case ErrorCode::kInvariantViolation:
    case ErrorCode::kValidationFailed:
      return 422;
    case ErrorCode::kIo:
    case ErrorCode::kConfig:
      return 500;
    default:
      return 400;
  }
}

HttpResponse Json(int status, const json& body) {
  return HttpResponse{status, body.dump(), "application/json"};
}

HttpResponse Failure(int status, std::string_view code,
                     const std::string& message) {
  return Json(status, {{"error",
                        {{"code", code},
                         {"message", message},
                         {"diagnostics", json::array()}}}});
}

std::vector<std::string> Segments(const std::string& path) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < path.size()) {
    std::size_t end = path.find('/', pos);
    if (end == std::string::npos) end = path.size();
    if (end > pos) out.push_back(path.substr(pos, end - pos));
    pos = end + 1;
  }
  return out;
}

json ParseBody(const std::string& body) {
  if (body.empty()) return json::object();
  json j = json::parse(body, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw Error(ErrorCode::kPrecondition, "request body must be a JSON object");
  }
  return j;
}

std::string QueryOr(const HttpRequest& r, const std::string& key,
                    std::string fallback) {
  auto it = r.query.find(key);
  return it == r.query.end() ? fallback : it->second;
}

}  // namespace

HttpApi::HttpApi(AlignService& service, KwicOptions kwic)
    : service_(service), kwic_(std::move(kwic)) {}

HttpResponse HttpApi::Handle(const HttpRequest& request) {
  const std::vector<std::string> seg = Segments(request.path);
  const bool get = request.method == "GET";
  const bool post = request.method == "POST";
  auto route = [&](std::size_t n, std::string_view first) {
    return seg.size() == n && seg[0] == first;
  };
  try {
    if (route(2, "corpus") && seg[1] == "meta") {
      if (!get) return Failure(405, "MethodNotAllowed", "use GET");
      std::shared_ptr<const Corpus> corpus = service_.corpus();
      json verses = json::array();
      for (std::size_t i : corpus->CanonicalOrder()) {
        verses.push_back(corpus->at(i).ref.ToString());
      }
      std::vector<std::string> books = corpus->Books();
      return Json(200, {{"label", corpus->label()},
                        {"revision", service_.revision()},
                        {"verse_count", corpus->size()},
                        {"books", books},
                        {"verses", verses},
                        {"lenient", service_.options().profile.lenient},
                        {"extractors", corpus->config().extractors}});
    }
    if (seg.size() >= 2 && seg.size() <= 3 && seg[0] == "verse") {
      const VerseRef ref = VerseRef::Parse(seg[1]);
      if (seg.size() == 2) {
        if (!get) return Failure(405, "MethodNotAllowed", "use GET");
        AlignService::VerseView view = service_.GetVerse(ref);
        return Json(200, {{"revision", view.revision},
                          {"verse", codec::ToJson(*view.verse)},
                          {"diagnostics", codec::ToJson(service_.Validate(ref)
                                                           .diagnostics)}});
      }
      if (seg[2] == "neighbors") {
        if (!get) return Failure(405, "MethodNotAllowed", "use GET");
        return Json(200, {{"ref", ref.ToString()},
                          {"prev", service_.Navigate(ref, Direction::kPrev)
                                       .ToString()},
                          {"next", service_.Navigate(ref, Direction::kNext)
                                       .ToString()}});
      }
      if (seg[2] == "edits") {
        if (!post) return Failure(405, "MethodNotAllowed", "use POST");
        const json body = ParseBody(request.body);
        if (!body.contains("base_revision") ||
            !body["base_revision"].is_number_unsigned()) {
          throw Error(ErrorCode::kInvalidEdit, "base_revision is required");
        }
        if (!body.contains("edits") || !body["edits"].is_array()) {
          throw Error(ErrorCode::kInvalidEdit, "edits must be an array");
        }
        std::vector<Edit> batch;
        for (const json& e : body["edits"]) batch.push_back(codec::EditFromJson(e));
        const std::string session =
            body.value("session", std::string("default"));
        std::uint64_t revision = service_.ApplyEdits(
            session, ref, body["base_revision"].get<std::uint64_t>(), batch);
        AlignService::VerseView view = service_.GetVerse(ref);
        return Json(200, {{"revision", revision},
                          {"verse", codec::ToJson(*view.verse)},
                          {"diagnostics", codec::ToJson(service_.Validate(ref)
                                                           .diagnostics)}});
      }
    }
    if (route(1, "session")) {
      if (!post) return Failure(405, "MethodNotAllowed", "use POST");
      std::lock_guard lock(session_mutex_);
      return Json(200, {{"session", "s" + std::to_string(next_session_++)}});
    }
    if (route(3, "session") && (seg[2] == "undo" || seg[2] == "redo")) {
      if (!post) return Failure(405, "MethodNotAllowed", "use POST");
      std::uint64_t revision = seg[2] == "undo" ? service_.Undo(seg[1])
                                                : service_.Redo(seg[1]);
      return Json(200, {{"revision", revision}});
    }
    if (route(1, "validate")) {
      if (!get) return Failure(405, "MethodNotAllowed", "use GET");
      const std::string scope = QueryOr(request, "scope", "corpus");
      std::optional<VerseRef> ref;
      if (scope != "corpus" && !scope.empty()) ref = VerseRef::Parse(scope);
      return Json(200, codec::ToJson(service_.Validate(ref)));
    }
    if (route(1, "search")) {
      if (!get) return Failure(405, "MethodNotAllowed", "use GET");
      const SearchType type = ParseSearchType(QueryOr(request, "type", "lemma"));
      json hits = json::array();
      for (const SearchHit& h : service_.Search(QueryOr(request, "q", ""), type)) {
        hits.push_back(codec::ToJson(h));
      }
      return Json(200, {{"hits", hits}});
    }
    if (route(2, "concordance")) {
      if (!get) return Failure(405, "MethodNotAllowed", "use GET");
      KwicOptions kwic = kwic_;
      const std::string width = QueryOr(request, "width", "");
      if (!width.empty()) {
        try {
          kwic.width = static_cast<std::size_t>(std::stoul(width));
        } catch (const std::exception&) {
          return Failure(400, "PreconditionViolation", "width must be a number");
        }
      }
      std::optional<HeadwordEntry> entry = service_.Concordance(seg[1]);
      if (!entry) {
        return Failure(404, "UnknownHeadword", "no headword '" + seg[1] + "'");
      }
      return Json(200, codec::ToJson(*entry, kwic));
    }
    if (route(1, "save")) {
      if (!post) return Failure(405, "MethodNotAllowed", "use POST");
      const json body = ParseBody(request.body);
      const bool force = body.value("force", false);
      service_.Save(force);
      return Json(200, {{"path", service_.options().path},
                        {"revision", service_.revision()}});
    }
    return Failure(404, "NotFound", "no route for " + request.path);
  } catch (const Error& e) {
    return Json(StatusFor(e.code()), codec::ToJson(e));
  } catch (const nlohmann::json::exception& e) {
    return Failure(400, "PreconditionViolation", e.what());
  }
}

struct HttpServer::Impl {
  Impl(AlignService& service, ServerOptions opts)
      : api(service), options(std::move(opts)) {}
  HttpApi api;
  ServerOptions options;
  httplib::Server server;
};

HttpServer::HttpServer(AlignService& service, ServerOptions options)
    : impl_(std::make_unique<Impl>(service, std::move(options))) {
  auto handler = [this](const httplib::Request& req, httplib::Response& res) {
    HttpRequest request{req.method, req.path, {}, req.body};
    for (const auto& [key, value] : req.params) request.query[key] = value;
    HttpResponse response = impl_->api.Handle(request);
    res.status = response.status;
    res.set_content(response.body, response.content_type);
  };
  // SO_REUSEPORT (the library default) would let a second server share a
  // port that is already taken.
  impl_->server.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
  });
  impl_->server.Get(".*", handler);
  impl_->server.Post(".*", handler);
}

HttpServer::~HttpServer() = default;

int HttpServer::Bind() {
  const ServerOptions& o = impl_->options;
  if (!o.static_dir.empty() && !impl_->server.set_mount_point("/", o.static_dir)) {
    throw Error(ErrorCode::kConfig,
                "static directory " + o.static_dir + " does not exist");
  }
  if (o.port == 0) {
    int port = impl_->server.bind_to_any_port(o.host);
    if (port < 0) throw Error(ErrorCode::kIo, "cannot bind " + o.host);
    return port;
  }
  if (!impl_->server.bind_to_port(o.host, o.port)) {
    throw Error(ErrorCode::kIo, "cannot bind " + o.host + ":" +
                                    std::to_string(o.port));
  }
  return o.port;
}

void HttpServer::Run() { impl_->server.listen_after_bind(); }

void HttpServer::Stop() { impl_->server.stop(); }

}  // namespace helfi
