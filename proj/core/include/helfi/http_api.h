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

#ifndef HELFI_HTTP_API_H_
#define HELFI_HTTP_API_H_

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "helfi/concordance.h"
#include "helfi/service.h"

namespace helfi {

struct HttpRequest {
  std::string method;  // "GET" or "POST"
  std::string path;    // URL-decoded
  std::map<std::string, std::string> query;
  std::string body;
};

struct HttpResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

// Transport-independent JSON router over an AlignService.
class HttpApi {
 public:
  explicit HttpApi(AlignService& service, KwicOptions kwic = {});

  HttpResponse Handle(const HttpRequest& request);

 private:
  AlignService& service_;
  KwicOptions kwic_;
  std::uint64_t next_session_ = 1;
  std::mutex session_mutex_;
};

struct ServerOptions {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  std::string static_dir;
};

class HttpServer {
 public:
  HttpServer(AlignService& service, ServerOptions options);
  ~HttpServer();

  // Returns the bound port. Throws Error(kIo) if the port is taken and
  // Error(kConfig) if the static directory does not exist.
  int Bind();
  // Serves until Stop(); call after Bind().
  void Run();
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace helfi

#endif  // HELFI_HTTP_API_H_
