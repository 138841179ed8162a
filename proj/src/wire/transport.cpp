#include <cosim/wire/transport.hpp>

#include <cerrno>
#include <cstdlib>
#include <cstring>

#include <arpa/inet.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <sys/socket.h>
#include <sys/un.h>
#include <unistd.h>

#include <cosim/errors.hpp>

namespace cosim::wire {

namespace {

[[noreturn]] void throw_errno(const std::string& what) {
    throw TransportError(what + ": " + std::strerror(errno));
}

int make_socket(Endpoint::Kind kind) {
    const int domain = kind == Endpoint::Kind::unix_socket ? AF_UNIX : AF_INET;
    const int fd = ::socket(domain, SOCK_STREAM, 0);
    if (fd < 0) throw_errno("socket");
    return fd;
}

sockaddr_un unix_addr(const std::string& path) {
    sockaddr_un addr{};
    addr.sun_family = AF_UNIX;
    if (path.size() >= sizeof(addr.sun_path))
        throw TransportError("unix socket path too long: " + path);
    std::strncpy(addr.sun_path, path.c_str(), sizeof(addr.sun_path) - 1);
    return addr;
}

sockaddr_in tcp_addr(const std::string& host, std::uint16_t port) {
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_port = htons(port);
    if (::inet_pton(AF_INET, host.c_str(), &addr.sin_addr) != 1)
        throw TransportError("invalid IPv4 address: " + host);
    return addr;
}

} // namespace

Endpoint Endpoint::parse(const std::string& text) {
    Endpoint ep;
    if (text.rfind("unix:", 0) == 0) {
        ep.kind = Kind::unix_socket;
        ep.path = text.substr(5);
        if (ep.path.empty()) throw ConfigError("empty unix socket path in \"" + text + "\"");
        return ep;
    }
    if (text.rfind("tcp:", 0) == 0) {
        ep.kind = Kind::tcp;
        const std::string rest = text.substr(4);
        const auto colon = rest.rfind(':');
        if (colon == std::string::npos)
            throw ConfigError("tcp endpoint needs host:port, got \"" + text + "\"");
        ep.host = rest.substr(0, colon);
        const long port = std::strtol(rest.c_str() + colon + 1, nullptr, 10);
        if (port <= 0 || port > 65535)
            throw ConfigError("bad tcp port in \"" + text + "\"");
        ep.port = static_cast<std::uint16_t>(port);
        return ep;
    }
    throw ConfigError("endpoint must start with unix: or tcp:, got \"" + text + "\"");
}

std::string Endpoint::to_string() const {
    if (kind == Kind::unix_socket) return "unix:" + path;
    return "tcp:" + host + ":" + std::to_string(port);
}

Endpoint endpoint_from_env_or(const std::string& fallback) {
    if (const char* env = std::getenv("COSIM_ENDPOINT"); env && *env)
        return Endpoint::parse(env);
    return Endpoint::parse(fallback);
}

Connection::~Connection() { close(); }

Connection::Connection(Connection&& other) noexcept
    : fd_(other.fd_), rx_(std::move(other.rx_)) {
    other.fd_ = -1;
}

Connection& Connection::operator=(Connection&& other) noexcept {
    if (this != &other) {
        close();
        fd_ = other.fd_;
        rx_ = std::move(other.rx_);
        other.fd_ = -1;
    }
    return *this;
}

void Connection::close() {
    if (fd_ >= 0) {
        ::close(fd_);
        fd_ = -1;
    }
}

void Connection::send_raw(const std::vector<std::uint8_t>& bytes) {
    if (fd_ < 0) throw TransportError("send on closed connection");
    std::size_t sent = 0;
    while (sent < bytes.size()) {
        const ssize_t n = ::send(fd_, bytes.data() + sent, bytes.size() - sent, MSG_NOSIGNAL);
        if (n < 0) {
            if (errno == EINTR) continue;
            throw_errno("send");
        }
        sent += static_cast<std::size_t>(n);
    }
}

void Connection::send_packet(const Packet& p, const Registry& registry) {
    send_raw(encode_packet(p, registry));
}

Packet Connection::recv_packet(const Registry& registry) {
    if (fd_ < 0) throw TransportError("recv on closed connection");
    std::uint8_t chunk[16384];
    for (;;) {
        if (auto decoded = decode_packet(rx_, registry)) {
            rx_.erase(rx_.begin(), rx_.begin() + static_cast<std::ptrdiff_t>(decoded->consumed));
            return std::move(decoded->packet);
        }
        const ssize_t n = ::recv(fd_, chunk, sizeof chunk, 0);
        if (n < 0) {
            if (errno == EINTR) continue;
            throw_errno("recv");
        }
        if (n == 0) throw TransportError("peer closed the connection");
        rx_.insert(rx_.end(), chunk, chunk + n);
    }
}

Connection connect_client(const Endpoint& ep) {
    const int fd = make_socket(ep.kind);
    int rc = 0;
    if (ep.kind == Endpoint::Kind::unix_socket) {
        const auto addr = unix_addr(ep.path);
        rc = ::connect(fd, reinterpret_cast<const sockaddr*>(&addr), sizeof addr);
    } else {
        const auto addr = tcp_addr(ep.host, ep.port);
        rc = ::connect(fd, reinterpret_cast<const sockaddr*>(&addr), sizeof addr);
    }
    if (rc != 0) {
        const int err = errno;
        ::close(fd);
        errno = err;
        throw_errno("connect to " + ep.to_string());
    }
    if (ep.kind == Endpoint::Kind::tcp) {
        const int one = 1;
        ::setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof one);
    }
    return Connection(fd);
}

Listener::~Listener() { close(); }

Listener::Listener(Listener&& other) noexcept
    : fd_(other.fd_), unlink_path_(std::move(other.unlink_path_)) {
    other.fd_ = -1;
    other.unlink_path_.clear();
}

Listener& Listener::operator=(Listener&& other) noexcept {
    if (this != &other) {
        close();
        fd_ = other.fd_;
        unlink_path_ = std::move(other.unlink_path_);
        other.fd_ = -1;
        other.unlink_path_.clear();
    }
    return *this;
}

Listener Listener::bind(const Endpoint& ep) {
    Listener l;
    l.fd_ = make_socket(ep.kind);
    if (ep.kind == Endpoint::Kind::unix_socket) {
        ::unlink(ep.path.c_str()); // stale socket from a previous run
        const auto addr = unix_addr(ep.path);
        if (::bind(l.fd_, reinterpret_cast<const sockaddr*>(&addr), sizeof addr) != 0)
            throw_errno("bind " + ep.to_string());
        l.unlink_path_ = ep.path;
    } else {
        const int one = 1;
        ::setsockopt(l.fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);
        const auto addr = tcp_addr(ep.host, ep.port);
        if (::bind(l.fd_, reinterpret_cast<const sockaddr*>(&addr), sizeof addr) != 0)
            throw_errno("bind " + ep.to_string());
    }
    if (::listen(l.fd_, 8) != 0) throw_errno("listen " + ep.to_string());
    return l;
}

Connection Listener::accept() {
    if (fd_ < 0) throw TransportError("accept on closed listener");
    for (;;) {
        const int fd = ::accept(fd_, nullptr, nullptr);
        if (fd < 0) {
            if (errno == EINTR) continue;
            throw_errno("accept");
        }
        return Connection(fd);
    }
}

void Listener::close() {
    if (fd_ >= 0) {
        ::shutdown(fd_, SHUT_RDWR);
        ::close(fd_);
        fd_ = -1;
    }
    if (!unlink_path_.empty()) {
        ::unlink(unlink_path_.c_str());
        unlink_path_.clear();
    }
}

} // namespace cosim::wire
