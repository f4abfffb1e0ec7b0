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

#pragma once

#include <memory>
#include <string>

#include "newsdeps/service.hpp"

namespace httplib {
class Server;
}

namespace newsdeps {

// Routes the HTTP API onto a Service.
class HttpServer {
 public:
  explicit HttpServer(Service& service);
  ~HttpServer();

  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Binds to host:port (port 0 picks a free port) and returns the port, or
  // -1 on failure.
  int bind(const std::string& host, int port);

  // Serves until stop() is called.
  bool listen_after_bind();
  void stop();

 private:
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace newsdeps
