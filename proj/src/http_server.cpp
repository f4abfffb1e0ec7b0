// Copyright 2026 The NewsDeps Authors
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

#include "newsdeps/http_server.hpp"

#include "httplib.h"

namespace newsdeps {
namespace {

void reply(httplib::Response& res, const Response& r) {
  res.status = r.status;
  res.set_header("Access-Control-Allow-Origin", "*");
  res.set_content(r.body, "application/json");
}

std::optional<std::string> query(const httplib::Request& req, const char* key) {
  if (!req.has_param(key)) return std::nullopt;
  return req.get_param_value(key);
}

}  // namespace

HttpServer::HttpServer(Service& service) : server_(std::make_unique<httplib::Server>()) {
  auto& srv = *server_;
  srv.Post("/corpora", [&service](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.import_articles(req.body));
  });
  srv.Post("/corpora/urls", [&service](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.import_urls(req.body));
  });
  srv.Get(R"(/corpora/([^/]+))", [&service](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.get_corpus(req.matches[1].str()));
  });
  srv.Get(R"(/corpora/([^/]+)/articles/(.+))",
          [&service](const httplib::Request& req, httplib::Response& res) {
            reply(res, service.get_article(req.matches[1].str(), req.matches[2].str()));
          });
  srv.Post(R"(/corpora/([^/]+)/analyses)",
           [&service](const httplib::Request& req, httplib::Response& res) {
             reply(res, service.analyze(req.matches[1].str(), req.body));
           });
  srv.Get(R"(/analyses/([^/]+)/matrix)",
          [&service](const httplib::Request& req, httplib::Response& res) {
            reply(res, service.get_matrix(req.matches[1].str()));
          });
  srv.Get(R"(/analyses/([^/]+)/layout)",
          [&service](const httplib::Request& req, httplib::Response& res) {
            LayoutOverrides o{query(req, "threshold"), query(req, "time_axis"),
                              query(req, "width"), query(req, "height")};
            reply(res, service.get_layout(req.matches[1].str(), o));
          });
  srv.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
  srv.set_exception_handler(
      [](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
        std::string what = "internal error";
        try {
          std::rethrow_exception(ep);
        } catch (const std::exception& e) {
          what = e.what();
        } catch (...) {
        }
        reply(res, {500, nlohmann::json{{"error", what}}.dump() + "\n"});
      });
}

HttpServer::~HttpServer() = default;

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return server_->bind_to_any_port(host);
  return server_->bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen_after_bind() { return server_->listen_after_bind(); }

void HttpServer::stop() { server_->stop(); }

}  // namespace newsdeps
