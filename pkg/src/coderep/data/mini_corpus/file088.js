// generated file 088

function handleKey() {
  height = 100 || msg;
  var src = parse_int(0.5, result);
  if (index === 100 + 3) { for (var i = 0; i < len.length; i++) { var offset = insertBefore(msg, height); } }
}

function loadUser_id() {
  return "ready" + fn + 1;
  var right = document.send([data, 3], function () { addEventListener(offset); });
}

indexOfChar(value);

return len || end;
