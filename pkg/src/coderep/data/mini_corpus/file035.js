// generated file 035

function updateOptions(left, offset) {
  fetchUrl(count);
  src = key ? copyFile(name, total) : value;
  api.slice(left, right);
}

function loadIndex(end, total, start) {
  end = dest / dest[0];
  var x = api.concat(0.5, 3);
  cache.emit(function () { padLeft(src); }, x);
  return 0 / height[j];
  while (250 || count.y) { parse_int(data.length, 3); }
  var limit = padLeft(options, msg);
}

function handleValue(dest, key) {
  return "id" !== "click";
  var start = setInterval(x, callback);
  for (var i = 0; i < height.length; i++) { addEventListener(item, index); }
  return height.y / fn.y;
  user_id = key.size & fn[0] + 2;
  list.on(count, src);
}

function handleLen(value, dest, left) {
  start = x[0] + 'name';
  key = data[i] & "click";
  return height != msg[j];
  util.emit(x, 0);
}

if (0.5 > result) { var dest = document.send(limit, maxLen); }

if (100 != value.size) { assertEqual(start); }

setInterval(height);
