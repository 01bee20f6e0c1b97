#include "hcot/http_backend.hpp"

#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <thread>

#include <httplib.h>

namespace hcot::llm {

using nlohmann::json;

namespace {

class HttplibTransport : public HttpTransport {
public:
    HttpResponse post(const std::string& endpoint, const std::string& bearer_token,
                      const std::string& json_body, int timeout_seconds) override {
        // Split scheme://host[:port]/path.
        auto scheme_end = endpoint.find("://");
        if (scheme_end == std::string::npos)
            return {0, "", true, "endpoint missing scheme: " + endpoint};
        auto path_start = endpoint.find('/', scheme_end + 3);
        std::string origin =
            path_start == std::string::npos ? endpoint : endpoint.substr(0, path_start);
        std::string path = path_start == std::string::npos ? "/" : endpoint.substr(path_start);

        httplib::Client client(origin);
        client.set_connection_timeout(timeout_seconds, 0);
        client.set_read_timeout(timeout_seconds, 0);
        httplib::Headers headers;
        if (!bearer_token.empty())
            headers.emplace("Authorization", "Bearer " + bearer_token);
        auto res = client.Post(path, headers, json_body, "application/json");
        if (!res) return {0, "", true, httplib::to_string(res.error())};
        return {res->status, res->body, false, ""};
    }
};

}  // namespace

std::unique_ptr<HttpTransport> make_httplib_transport() {
    return std::make_unique<HttplibTransport>();
}

class HttpBackend::InFlightGuard {
public:
    explicit InFlightGuard(HttpBackend& backend) : backend_(backend) {
        std::unique_lock<std::mutex> lock(backend_.mutex_);
        backend_.slots_cv_.wait(
            lock, [&] { return backend_.in_flight_ < backend_.config_.max_in_flight; });
        ++backend_.in_flight_;
    }
    ~InFlightGuard() {
        {
            std::lock_guard<std::mutex> lock(backend_.mutex_);
            --backend_.in_flight_;
        }
        backend_.slots_cv_.notify_one();
    }

private:
    HttpBackend& backend_;
};

HttpBackend::HttpBackend(BackendConfig config, std::unique_ptr<HttpTransport> transport,
                         std::function<void(int)> sleep_ms)
    : config_(std::move(config)),
      transport_(transport ? std::move(transport) : make_httplib_transport()),
      sleep_ms_(sleep_ms ? std::move(sleep_ms) : [](int ms) {
          std::this_thread::sleep_for(std::chrono::milliseconds(ms));
      }) {
    if (config_.max_attempts < 1)
        throw GatewayError(GatewayError::Kind::Precondition, "max_attempts must be >= 1");
    if (config_.max_in_flight < 1)
        throw GatewayError(GatewayError::Kind::Precondition, "max_in_flight must be >= 1");
}

Completion HttpBackend::complete(const CompletionRequest& request) {
    validate_request(request);

    json body{{"model", request.model_name}, {"temperature", request.temperature}};
    body["messages"] = json::array();
    for (const auto& m : request.messages)
        body["messages"].push_back({{"role", m.role}, {"content", m.text}});
    if (request.max_tokens) body["max_tokens"] = *request.max_tokens;
    const std::string payload = body.dump();

    const char* token = std::getenv(config_.credential_env.c_str());
    const std::string bearer = token ? token : "";

    InFlightGuard guard(*this);

    std::string last_error;
    int backoff = config_.backoff_ms;
    for (int attempt = 1; attempt <= config_.max_attempts; ++attempt) {
        HttpResponse res =
            transport_->post(config_.endpoint, bearer, payload, config_.timeout_seconds);
        if (res.transport_error) {
            last_error = res.error.empty() ? "transport failure" : res.error;
        } else if (res.status == 401 || res.status == 403) {
            throw GatewayError(GatewayError::Kind::Auth,
                               "authentication failed (" + std::to_string(res.status) + ")");
        } else if (res.status == 429 || res.status >= 500) {
            last_error = "status " + std::to_string(res.status);
        } else if (res.status != 200) {
            throw GatewayError(GatewayError::Kind::BadResponse,
                               "unexpected status " + std::to_string(res.status) + ": " +
                                   res.body.substr(0, 200));
        } else {
            json doc;
            try {
                doc = json::parse(res.body);
            } catch (const json::parse_error& e) {
                throw GatewayError(GatewayError::Kind::BadResponse,
                                   std::string("unparseable response body: ") + e.what());
            }
            Completion c;
            c.backend_id = id();
            try {
                c.text = doc.at("choices").at(0).at("message").at("content").get<std::string>();
            } catch (const json::exception&) {
                throw GatewayError(GatewayError::Kind::BadResponse,
                                   "response missing choices[0].message.content");
            }
            if (doc.contains("usage") && doc["usage"].contains("prompt_tokens")) {
                c.usage.prompt_tokens = doc["usage"].value("prompt_tokens", 0LL);
                c.usage.generated_tokens = doc["usage"].value("completion_tokens", 0LL);
            } else {
                long long prompt = 0;
                for (const auto& m : request.messages) prompt += estimate_tokens(m.text);
                c.usage.prompt_tokens = prompt;
                c.usage.generated_tokens = estimate_tokens(c.text);
                c.usage.estimated = true;
            }
            return c;
        }
        if (attempt < config_.max_attempts) {
            sleep_ms_(backoff);
            backoff *= 2;
        }
    }
    throw GatewayError(GatewayError::Kind::Transport,
                       "request failed after " + std::to_string(config_.max_attempts) +
                           " attempts: " + last_error);
}

}  // namespace hcot::llm
