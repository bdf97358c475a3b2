#include "thompson/net.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

namespace thompson {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw NetError(what + ": " + std::strerror(errno));
}

}  // namespace

FdStream::~FdStream() {
  if (fd_ >= 0) {
    ::close(fd_);
  }
}

FdStream::FdStream(FdStream&& other) noexcept
    : fd_(std::exchange(other.fd_, -1)), buffer_(std::move(other.buffer_)) {}

FdStream& FdStream::operator=(FdStream&& other) noexcept {
  if (this != &other) {
    if (fd_ >= 0) {
      ::close(fd_);
    }
    fd_ = std::exchange(other.fd_, -1);
    buffer_ = std::move(other.buffer_);
  }
  return *this;
}

bool FdStream::read_line(std::string& out) {
  for (;;) {
    if (const auto nl = buffer_.find('\n'); nl != std::string::npos) {
      out.assign(buffer_, 0, nl);
      buffer_.erase(0, nl + 1);
      return true;
    }
    char chunk[4096];
    const ssize_t got = ::read(fd_, chunk, sizeof(chunk));
    if (got < 0) {
      if (errno == EINTR) {
        continue;
      }
      fail("read");
    }
    if (got == 0) {
      return false;  // EOF; any partial line is dropped
    }
    buffer_.append(chunk, static_cast<std::size_t>(got));
  }
}

void FdStream::write_line(std::string_view line) {
  std::string framed(line);
  framed += '\n';
  std::size_t sent = 0;
  while (sent < framed.size()) {
    const ssize_t wrote =
        ::write(fd_, framed.data() + sent, framed.size() - sent);
    if (wrote < 0) {
      if (errno == EINTR) {
        continue;
      }
      fail("write");
    }
    sent += static_cast<std::size_t>(wrote);
  }
}

TcpListener TcpListener::bind_port(std::uint16_t port) {
  TcpListener listener;
  listener.fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
  if (listener.fd_ < 0) {
    fail("socket");
  }
  const int one = 1;
  ::setsockopt(listener.fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_addr.s_addr = htonl(INADDR_ANY);
  addr.sin_port = htons(port);
  if (::bind(listener.fd_, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) <
      0) {
    fail("bind");
  }
  if (::listen(listener.fd_, 1) < 0) {
    fail("listen");
  }
  socklen_t len = sizeof(addr);
  if (::getsockname(listener.fd_, reinterpret_cast<sockaddr*>(&addr), &len) <
      0) {
    fail("getsockname");
  }
  listener.port_ = ntohs(addr.sin_port);
  return listener;
}

TcpListener::~TcpListener() {
  if (fd_ >= 0) {
    ::close(fd_);
  }
}

TcpListener::TcpListener(TcpListener&& other) noexcept
    : fd_(std::exchange(other.fd_, -1)),
      port_(std::exchange(other.port_, 0)) {}

TcpListener& TcpListener::operator=(TcpListener&& other) noexcept {
  if (this != &other) {
    if (fd_ >= 0) {
      ::close(fd_);
    }
    fd_ = std::exchange(other.fd_, -1);
    port_ = std::exchange(other.port_, 0);
  }
  return *this;
}

FdStream TcpListener::accept_one() {
  for (;;) {
    const int fd = ::accept(fd_, nullptr, nullptr);
    if (fd >= 0) {
      return FdStream(fd);
    }
    if (errno != EINTR) {
      fail("accept");
    }
  }
}

FdStream tcp_connect(const std::string& host, std::uint16_t port) {
  addrinfo hints{};
  hints.ai_family = AF_INET;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* found = nullptr;
  const int rc =
      ::getaddrinfo(host.c_str(), std::to_string(port).c_str(), &hints, &found);
  if (rc != 0) {
    throw NetError("getaddrinfo(" + host + "): " + gai_strerror(rc));
  }
  int fd = -1;
  for (addrinfo* ai = found; ai != nullptr; ai = ai->ai_next) {
    fd = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
    if (fd < 0) {
      continue;
    }
    if (::connect(fd, ai->ai_addr, ai->ai_addrlen) == 0) {
      break;
    }
    ::close(fd);
    fd = -1;
  }
  ::freeaddrinfo(found);
  if (fd < 0) {
    throw NetError("could not connect to " + host + ":" +
                   std::to_string(port));
  }
  return FdStream(fd);
}

std::pair<FdStream, FdStream> local_stream_pair() {
  int fds[2];
  if (::socketpair(AF_UNIX, SOCK_STREAM, 0, fds) < 0) {
    fail("socketpair");
  }
  return {FdStream(fds[0]), FdStream(fds[1])};
}

}  // namespace thompson
