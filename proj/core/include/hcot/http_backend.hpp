#pragma once

#include <condition_variable>
#include <functional>
#include <memory>

#include "hcot/gateway.hpp"

namespace hcot::llm {

struct BackendConfig {
    std::string endpoint = "http://localhost:8000/v1/chat/completions";
    std::string credential_env = "LLM_API_KEY";  // env var holding the bearer token
    int max_attempts = 3;                        // >= 1
    int backoff_ms = 250;                        // doubled after each retry
    int timeout_seconds = 120;
    int max_in_flight = 4;                       // >= 1
};

struct HttpResponse {
    int status = 0;
    std::string body;
    bool transport_error = false;
    std::string error;
};

/// Transport seam: the production implementation posts over cpp-httplib;
/// tests substitute an instrumented fake.
class HttpTransport {
public:
    virtual ~HttpTransport() = default;
    virtual HttpResponse post(const std::string& endpoint, const std::string& bearer_token,
                              const std::string& json_body, int timeout_seconds) = 0;
};

std::unique_ptr<HttpTransport> make_httplib_transport();

/// Chat-completions backend speaking the de-facto JSON wire shape:
/// {model, messages:[{role, content}], temperature [, max_tokens]} in,
/// {choices:[{message:{content}}], usage:{prompt_tokens,
/// completion_tokens}} out. Retries transport/5xx/429 failures with
/// exponential backoff; auth failures are not retried. Concurrent
/// complete() calls are capped at max_in_flight.
class HttpBackend : public ChatBackend {
public:
    HttpBackend(BackendConfig config, std::unique_ptr<HttpTransport> transport = nullptr,
                std::function<void(int)> sleep_ms = {});

    Completion complete(const CompletionRequest& request) override;
    std::string id() const override { return "http:" + config_.endpoint; }

private:
    class InFlightGuard;

    BackendConfig config_;
    std::unique_ptr<HttpTransport> transport_;
    std::function<void(int)> sleep_ms_;
    std::mutex mutex_;
    std::condition_variable slots_cv_;
    int in_flight_ = 0;
};

}  // namespace hcot::llm
