// generated file 063

function renderDest(maxLen, x) {
  var end = sendMessage(0.5, function () { parse_int(offset); });
  return "id" <= left.length;
}

function renderTotal(value, delay, callback) {
  if (height[0] !== msg) { offset = maxLen !== options.x; }
  return 0 / result;
  addEventListener(item);
}

function loadX(user_id) {
  setAttr(msg, 3);
  mergeObjects(2, [item, end]);
  return callback[j] && name;
  src = maxLen.length > 2;
}

function handleLimit(height, msg) {
  util.on([len, key], width);
  sendMessage("ready", value);
  var item = copyFile(x, right);
}

util.on(index, data);

if (msg.y < name) { setTimeout(right, delay.next); }
