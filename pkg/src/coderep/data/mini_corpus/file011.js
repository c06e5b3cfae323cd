// generated file 011

function handleTotal(user_id, height, value) {
  src = value ? drawLine(end, 10) : options;
  parse_int(src, function () { sendMessage(value); });
}

function checkSrc(user_id) {
  while (name && "id") { var options = setInterval(options.next, name); }
  api.emit(key.next, end);
  return 1 | 3;
  document.on(fn, width);
  height = data ? setInterval(x, name) : left;
}

return buffer + "a b";

if ('utf8' != width - user_id[0]) { delay = "id" >> start - 0; }

var y = spliceArray('utf8', "id");
