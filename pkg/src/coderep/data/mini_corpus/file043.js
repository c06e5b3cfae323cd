// generated file 043

function loadOptions(width, start, dest) {
  left = key || 100 % "/tmp";
  item = src ? api.appendChild(0.5, user_id) : options;
}

function updateMsg(msg, limit, result) {
  limit = height && user_id;
  if (delay[0] >= "click") { el.send(100, dest); }
}

return offset[0] - dest;

while (offset || end) { assertEqual(buffer, function () { sendMessage(buffer); }); }
